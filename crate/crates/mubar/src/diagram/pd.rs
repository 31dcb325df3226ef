//! PD-code text for diagrams.
//!
//! A diagram is a whitespace- or comma-separated list of terms. A crossing
//! is `X[a,b,c,d]` with the four arc labels read counterclockwise starting
//! from the incoming under-arc, so the under strand runs `a -> c`; the over
//! strand enters at `d` for a positive crossing and at `b` for a negative
//! one. A crossingless loop is `O[a]`. Arc labels are numbered consecutively
//! along each component (wrapping from the component's highest label back to
//! its lowest), and components are ordered by their lowest label.
//!
//! The over-strand direction is not stored; it is recovered from label
//! adjacency, with end/begin constraint propagation settling wrap-around
//! cases such as `X[1,2,2,1]`.

use super::{Arc, Crossing, LinkDiagram};
use crate::error::PdError;

#[derive(Debug)]
enum Term {
    Crossing { labels: [usize; 4] },
    Loop { label: usize },
}

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self { text: text.as_bytes(), pos: 0 }
    }

    fn skip_filler(&mut self) {
        while self.pos < self.text.len() && (self.text[self.pos].is_ascii_whitespace() || self.text[self.pos] == b',') {
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), PdError> {
        self.skip_filler();
        if self.pos < self.text.len() && self.text[self.pos] == byte {
            self.pos += 1;
            Ok(())
        } else {
            Err(PdError::Syntax { pos: self.pos, msg: format!("expected '{}'", byte as char) })
        }
    }

    fn number(&mut self) -> Result<usize, PdError> {
        self.skip_filler();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PdError::Syntax { pos: start, msg: "expected arc label".into() });
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .filter(|&n| n > 0)
            .ok_or(PdError::Syntax { pos: start, msg: "bad arc label".into() })
    }

    fn terms(&mut self) -> Result<Vec<Term>, PdError> {
        let mut out = Vec::new();
        loop {
            self.skip_filler();
            if self.pos >= self.text.len() {
                break;
            }
            let pos = self.pos;
            match self.text[self.pos] {
                b'X' | b'x' => {
                    self.pos += 1;
                    self.expect(b'[')?;
                    let labels = [self.number()?, self.number()?, self.number()?, self.number()?];
                    self.expect(b']')?;
                    out.push(Term::Crossing { labels });
                }
                b'O' | b'o' => {
                    self.pos += 1;
                    self.expect(b'[')?;
                    let label = self.number()?;
                    self.expect(b']')?;
                    out.push(Term::Loop { label });
                }
                other => {
                    return Err(PdError::Syntax { pos, msg: format!("expected X[...] or O[...], found '{}'", other as char) });
                }
            }
        }
        if out.is_empty() {
            return Err(PdError::Syntax { pos: 0, msg: "empty PD code".into() });
        }
        Ok(out)
    }
}

/// Parses one diagram from PD-code text.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, PdError> {
    let terms = Scanner::new(text).terms()?;

    let mut crossings_raw = Vec::new();
    let mut loops = Vec::new();
    let mut max_label = 0usize;
    for term in &terms {
        match term {
            Term::Crossing { labels } => {
                max_label = max_label.max(*labels.iter().max().unwrap());
                crossings_raw.push(*labels);
            }
            Term::Loop { label } => {
                max_label = max_label.max(*label);
                loops.push(*label);
            }
        }
    }

    // Labels must cover 1..=m, each crossing label appearing exactly twice.
    let m = max_label;
    let mut uses = vec![0usize; m + 1];
    for labels in &crossings_raw {
        for &l in labels {
            uses[l] += 1;
        }
    }
    for &l in &loops {
        if uses[l] != 0 {
            return Err(PdError::BadArcCount { label: l, count: uses[l] + 1 });
        }
        uses[l] = 2; // occupies both of its slots by itself
    }
    let mut found = 0;
    for l in 1..=m {
        match uses[l] {
            0 => return Err(PdError::BadLabelRange { expected: m, found: l - 1 }),
            2 => found += 1,
            c => return Err(PdError::BadArcCount { label: l, count: c }),
        }
    }
    debug_assert_eq!(found, m);

    // End/begin bookkeeping: every crossing label ends at exactly one
    // passage and begins at exactly one.
    fn claim(
        succ: &mut [Option<usize>],
        ends: &mut [bool],
        begins: &mut [bool],
        x: usize,
        y: usize,
    ) -> Result<(), PdError> {
        if ends[x] || begins[y] {
            return Err(PdError::Orientation(format!("arc {x} -> {y} conflicts with an earlier passage")));
        }
        ends[x] = true;
        begins[y] = true;
        succ[x] = Some(y);
        Ok(())
    }
    let mut ends_used = vec![false; m + 1];
    let mut begins_used = vec![false; m + 1];
    let mut succ: Vec<Option<usize>> = vec![None; m + 1];

    for labels in &crossings_raw {
        let (a, c) = (labels[0], labels[2]);
        claim(&mut succ, &mut ends_used, &mut begins_used, a, c)?;
    }

    // Resolve over-strand directions: `x -> y` needs y == x+1 (consecutive)
    // or x > y (wrap from a component's highest label to its lowest).
    #[derive(Clone, Copy)]
    struct OverPair {
        b: usize,
        d: usize,
        resolved: Option<bool>, // Some(true): over enters at d (+1), Some(false): at b (-1)
    }
    let mut pairs: Vec<OverPair> = crossings_raw.iter().map(|l| OverPair { b: l[1], d: l[3], resolved: None }).collect();

    let plausible = |x: usize, y: usize| y == x + 1 || x > y;
    loop {
        let mut progressed = false;
        let mut forced_any = false;
        for i in 0..pairs.len() {
            let OverPair { b, d, resolved } = pairs[i];
            if resolved.is_some() {
                continue;
            }
            if b == d {
                // single-arc loop passing over: direction is degenerate
                pairs[i].resolved = Some(true);
                succ[b] = Some(b);
                ends_used[b] = true;
                begins_used[b] = true;
                progressed = true;
                forced_any = true;
                continue;
            }
            // enters at d: d -> b, sign +1; enters at b: b -> d, sign -1
            let ok_d = plausible(d, b) && !ends_used[d] && !begins_used[b];
            let ok_b = plausible(b, d) && !ends_used[b] && !begins_used[d];
            match (ok_d, ok_b) {
                (false, false) => {
                    return Err(PdError::Orientation(format!("over strand through arcs {b},{d} fits no orientation")));
                }
                (true, false) => {
                    claim(&mut succ, &mut ends_used, &mut begins_used, d, b)?;
                    pairs[i].resolved = Some(true);
                    progressed = true;
                    forced_any = true;
                }
                (false, true) => {
                    claim(&mut succ, &mut ends_used, &mut begins_used, b, d)?;
                    pairs[i].resolved = Some(false);
                    progressed = true;
                    forced_any = true;
                }
                (true, true) => {}
            }
        }
        if !forced_any {
            // No forced choice left: settle the first open pair, preferring
            // the consecutive (non-wrap) reading.
            if let Some(i) = pairs.iter().position(|p| p.resolved.is_none()) {
                let OverPair { b, d, .. } = pairs[i];
                if d + 1 == b {
                    claim(&mut succ, &mut ends_used, &mut begins_used, d, b)?;
                    pairs[i].resolved = Some(true);
                } else {
                    claim(&mut succ, &mut ends_used, &mut begins_used, b, d)?;
                    pairs[i].resolved = Some(false);
                }
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }

    for &l in &loops {
        succ[l] = Some(l);
    }

    // Cycle structure: consecutive labels along each component.
    let mut component_of = vec![0usize; m + 1];
    let mut components = 0usize;
    for start in 1..=m {
        if component_of[start] != 0 {
            continue;
        }
        components += 1;
        let mut cycle = vec![start];
        let mut cur = start;
        loop {
            cur = succ[cur].ok_or_else(|| PdError::Orientation(format!("arc {cur} has no successor")))?;
            if cur == start {
                break;
            }
            if component_of[cur] != 0 || cycle.contains(&cur) {
                return Err(PdError::Orientation(format!("arc {cur} visited twice")));
            }
            cycle.push(cur);
        }
        let lo = *cycle.iter().min().unwrap();
        let hi = *cycle.iter().max().unwrap();
        if hi - lo + 1 != cycle.len() {
            return Err(PdError::Orientation(format!("component through arc {lo} is not consecutively labeled")));
        }
        for &l in &cycle {
            component_of[l] = components;
            let expected = if l == hi { lo } else { l + 1 };
            if succ[l] != Some(expected) {
                return Err(PdError::Orientation(format!("arc {l} must continue into {expected}")));
            }
        }
    }

    // Components in order of their lowest label: since every component's
    // cycle starts at its minimum and we scanned labels ascending, the
    // numbering above already complies.
    let arcs: Vec<Arc> = (1..=m)
        .map(|l| Arc { component: component_of[l], next: succ[l].unwrap() - 1 })
        .collect();
    let crossings: Vec<Crossing> = crossings_raw
        .iter()
        .zip(&pairs)
        .map(|(labels, pair)| {
            let positive = pair.resolved.unwrap();
            let (over_in, over_out) = if positive { (pair.d, pair.b) } else { (pair.b, pair.d) };
            Crossing {
                over_in: over_in - 1,
                over_out: over_out - 1,
                under_in: labels[0] - 1,
                under_out: labels[2] - 1,
                sign: if positive { 1 } else { -1 },
            }
        })
        .collect();

    Ok(LinkDiagram::new(arcs, crossings, components)?)
}

/// Renders a diagram back into PD-code text with canonical labels (walk
/// order within each component, components in index order).
pub fn emit_pd(d: &LinkDiagram) -> String {
    let mut label = vec![0usize; d.arc_count()];
    let mut counter = 0usize;
    for comp in 1..=d.component_count() {
        for arc in d.component_arcs(comp).expect("valid component") {
            counter += 1;
            label[arc] = counter;
        }
    }

    let mut order: Vec<usize> = (0..d.crossing_count()).collect();
    // Two-arc components that only pass over are direction-ambiguous in PD
    // text; the parser settles the first such crossing it sees with the
    // ascending reading, so put the crossing where the lower label ends
    // first.
    for comp in 1..=d.component_count() {
        let arcs = d.component_arcs(comp).expect("valid component");
        if arcs.len() == 2 {
            let e0 = d.end_of(arcs[0]);
            let e1 = d.end_of(arcs[1]);
            if let (Some(p0), Some(p1)) = (e0, e1) {
                if p0.over && p1.over {
                    let pos0 = order.iter().position(|&c| c == p0.crossing).unwrap();
                    let pos1 = order.iter().position(|&c| c == p1.crossing).unwrap();
                    if pos0 > pos1 {
                        order.swap(pos0, pos1);
                    }
                }
            }
        }
    }

    let mut terms = Vec::new();
    for &cid in &order {
        let c = &d.crossings()[cid];
        let (a, cc) = (label[c.under_in], label[c.under_out]);
        let (b, dd) = if c.sign > 0 {
            (label[c.over_out], label[c.over_in])
        } else {
            (label[c.over_in], label[c.over_out])
        };
        terms.push(format!("X[{a},{b},{cc},{dd}]"));
    }
    for comp in 1..=d.component_count() {
        let arcs = d.component_arcs(comp).expect("valid component");
        if arcs.len() == 1 && d.end_of(arcs[0]).is_none() {
            terms.push(format!("O[{}]", label[arcs[0]]));
        }
    }
    terms.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;
    use crate::linking;

    #[test]
    fn crossingless_loop() {
        let d = parse_pd("O[1]").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn loop_next_to_a_hopf_link() {
        let d = parse_pd("X[1,3,2,4] X[3,1,4,2] O[5]").unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.crossing_count(), 2);
    }

    #[test]
    fn arc_used_once_is_an_incidence_error() {
        let err = parse_pd("X[1,2,3,4]").unwrap_err();
        assert!(matches!(err, PdError::BadArcCount { .. } | PdError::BadLabelRange { .. }), "{err}");
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_pd("X[1,2,3,4] Y[1]").unwrap_err();
        match err {
            PdError::Syntax { pos, .. } => assert_eq!(pos, 11),
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn kink_with_wrap_around_labels() {
        let d = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(linking::writhe_component(&d, 1).unwrap(), -1);
    }

    #[test]
    fn round_trip_is_stable_text() {
        for (word, strands) in [("1 1", 2), ("1 -2 1 -2 1 -2", 3), ("1 1 1", 2), ("1 -2 1 -2 1", 3)] {
            let d = parse_braid(word, strands).unwrap();
            let text = emit_pd(&d);
            let back = parse_pd(&text).unwrap();
            assert_eq!(emit_pd(&back), text, "braid {word}");
            assert_eq!(back.component_count(), d.component_count());
            assert_eq!(back.crossing_count(), d.crossing_count());
        }
    }

    #[test]
    fn trefoil_pd_parses_with_negative_signs() {
        // the usual minimal left-handed trefoil code
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 3);
        assert!(d.crossings().iter().all(|c| c.sign == -1));
        assert_eq!(linking::writhe_component(&d, 1).unwrap(), -3);
    }
}
