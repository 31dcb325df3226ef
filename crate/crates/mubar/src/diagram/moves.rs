//! Local moves on diagrams: Reidemeister moves, crossing changes and the
//! three-strand delta move.
//!
//! Moves are pure: `apply_move` returns a fresh diagram (arc and crossing
//! ids are re-compacted, so sites must be picked against the current
//! diagram). The delta move splices the six-crossing weave `1 -2 1 -2 1 -2`
//! across three strands; its pairwise crossing contributions cancel, so the
//! linking matrix is untouched while higher invariants change.

use rand::prelude::*;

use super::{ArcId, Builder, Crossing, CrossingId, LinkDiagram};
use crate::error::DiagramError;

/// One local move and where to apply it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveSpec {
    /// Insert a kink on an arc. `over_first` picks which passage the strand
    /// makes first; either way the writhe changes by `sign`.
    R1Insert { arc: ArcId, sign: i8, over_first: bool },
    /// Remove a kink crossing.
    R1Remove { crossing: CrossingId },
    /// Poke arc `over` across arc `under` (equal ids poke an arc over
    /// itself). The two new crossings get signs `sign` and `-sign`.
    R2Insert { over: ArcId, under: ArcId, sign: i8 },
    /// Remove a cancelling pair of crossings forming a bigon.
    R2Remove { first: CrossingId, second: CrossingId },
    /// Slide the strand passing over both `over_first` and `over_second`
    /// across the crossing `lower`.
    R3 { over_first: CrossingId, over_second: CrossingId, lower: CrossingId },
    CrossingChange { crossing: CrossingId },
    SelfCrossingChange { crossing: CrossingId },
    /// Splice the Borromean-style tangle across three parallel coherently
    /// oriented strands (any braid-position triple qualifies).
    DeltaMove { strands: [ArcId; 3] },
}

const DELTA_WEAVE: [i32; 6] = [1, -2, 1, -2, 1, -2];

pub fn apply_move(d: &LinkDiagram, m: &MoveSpec) -> Result<LinkDiagram, DiagramError> {
    match *m {
        MoveSpec::R1Insert { arc, sign, over_first } => r1_insert(d, arc, sign, over_first),
        MoveSpec::R1Remove { crossing } => r1_remove(d, crossing),
        MoveSpec::R2Insert { over, under, sign } => r2_insert(d, over, under, sign),
        MoveSpec::R2Remove { first, second } => r2_remove(d, first, second),
        MoveSpec::R3 { over_first, over_second, lower } => r3(d, over_first, over_second, lower),
        MoveSpec::CrossingChange { crossing } => crossing_change(d, crossing, false),
        MoveSpec::SelfCrossingChange { crossing } => crossing_change(d, crossing, true),
        MoveSpec::DeltaMove { strands } => delta_move(d, strands),
    }
}

fn check_sign(sign: i8) -> Result<(), DiagramError> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(DiagramError::InvalidSite(format!("sign {sign} must be +1 or -1")))
    }
}

fn r1_insert(d: &LinkDiagram, arc: ArcId, sign: i8, over_first: bool) -> Result<LinkDiagram, DiagramError> {
    d.arc(arc)?;
    check_sign(sign)?;
    let mut b = Builder::from_diagram(d);
    let mid = b.split_after(arc);
    let tail = b.split_after(mid);
    let c = if over_first {
        Crossing { over_in: arc, over_out: mid, under_in: mid, under_out: tail, sign }
    } else {
        Crossing { over_in: mid, over_out: tail, under_in: arc, under_out: mid, sign }
    };
    b.add_crossing(c);
    b.finish(d.component_count())
}

fn is_kink(c: &Crossing) -> bool {
    c.under_out == c.over_in || c.over_out == c.under_in
}

fn r1_remove(d: &LinkDiagram, crossing: CrossingId) -> Result<LinkDiagram, DiagramError> {
    let c = d.crossing(crossing)?;
    if !is_kink(c) {
        return Err(DiagramError::InvalidSite(format!("crossing {crossing} is not a kink")));
    }
    let mut b = Builder::from_diagram(d);
    b.remove_crossing(crossing);
    b.finish(d.component_count())
}

fn r2_insert(d: &LinkDiagram, over: ArcId, under: ArcId, sign: i8) -> Result<LinkDiagram, DiagramError> {
    d.arc(over)?;
    d.arc(under)?;
    check_sign(sign)?;
    let mut b = Builder::from_diagram(d);
    if over != under {
        let o2 = b.split_after(over);
        let o3 = b.split_after(o2);
        let u2 = b.split_after(under);
        let u3 = b.split_after(u2);
        b.add_crossing(Crossing { over_in: over, over_out: o2, under_in: under, under_out: u2, sign });
        b.add_crossing(Crossing { over_in: o2, over_out: o3, under_in: u2, under_out: u3, sign: -sign });
    } else {
        // the strand pokes over a bit of itself further along
        let a2 = b.split_after(over);
        let a3 = b.split_after(a2);
        let a4 = b.split_after(a3);
        let a5 = b.split_after(a4);
        b.add_crossing(Crossing { over_in: a4, over_out: a5, under_in: over, under_out: a2, sign });
        b.add_crossing(Crossing { over_in: a3, over_out: a4, under_in: a2, under_out: a3, sign: -sign });
    }
    b.finish(d.component_count())
}

/// A bigon pair: the over strand runs first -> second, the under strand
/// either parallel (first -> second) or antiparallel (second -> first), with
/// cancelling signs.
fn is_r2_pair(d: &LinkDiagram, first: CrossingId, second: CrossingId) -> bool {
    if first == second {
        return false;
    }
    let (Ok(a), Ok(b)) = (d.crossing(first), d.crossing(second)) else {
        return false;
    };
    if a.sign != -b.sign || a.over_out != b.over_in {
        return false;
    }
    a.under_out == b.under_in || b.under_out == a.under_in
}

fn r2_remove(d: &LinkDiagram, first: CrossingId, second: CrossingId) -> Result<LinkDiagram, DiagramError> {
    // accept the pair in either order
    let (first, second) = if is_r2_pair(d, first, second) {
        (first, second)
    } else if is_r2_pair(d, second, first) {
        (second, first)
    } else {
        return Err(DiagramError::InvalidSite(format!("crossings {first},{second} do not bound a bigon")));
    };
    let mut b = Builder::from_diagram(d);
    b.remove_crossing(first);
    b.remove_crossing(second);
    b.finish(d.component_count())
}

/// The two passages of one strand around a triangle, in strand order.
struct Flank {
    e_in: ArcId,
    mid: ArcId,
    e_out: ArcId,
}

fn r3_sides(d: &LinkDiagram, over_first: CrossingId, over_second: CrossingId, lower: CrossingId) -> Result<(Flank, Flank, bool, Flank, bool), DiagramError> {
    let c1 = *d.crossing(over_first)?;
    let c2 = *d.crossing(over_second)?;
    let x = *d.crossing(lower)?;
    if over_first == over_second || over_first == lower || over_second == lower {
        return Err(DiagramError::InvalidSite("R3 needs three distinct crossings".into()));
    }
    if c1.over_out != c2.over_in {
        return Err(DiagramError::InvalidSite("top strand does not run across both over-crossings".into()));
    }
    let top = Flank { e_in: c1.over_in, mid: c1.over_out, e_out: c2.over_out };
    // middle strand: under at over_first, over at lower
    let (mid_strand, mid_forward) = if c1.under_out == x.over_in {
        (Flank { e_in: c1.under_in, mid: c1.under_out, e_out: x.over_out }, true)
    } else if x.over_out == c1.under_in {
        (Flank { e_in: x.over_in, mid: x.over_out, e_out: c1.under_out }, false)
    } else {
        return Err(DiagramError::InvalidSite("middle strand is not adjacent to the lower crossing".into()));
    };
    // bottom strand: under at over_second, under at lower
    let (bot_strand, bot_forward) = if c2.under_out == x.under_in {
        (Flank { e_in: c2.under_in, mid: c2.under_out, e_out: x.under_out }, true)
    } else if x.under_out == c2.under_in {
        (Flank { e_in: x.under_in, mid: x.under_out, e_out: c2.under_out }, false)
    } else {
        return Err(DiagramError::InvalidSite("bottom strand is not adjacent to the lower crossing".into()));
    };
    Ok((top, mid_strand, mid_forward, bot_strand, bot_forward))
}

fn r3(d: &LinkDiagram, over_first: CrossingId, over_second: CrossingId, lower: CrossingId) -> Result<LinkDiagram, DiagramError> {
    let (top, mid, mid_forward, bot, bot_forward) = r3_sides(d, over_first, over_second, lower)?;
    let mut crossings = d.crossings().to_vec();

    // Swap the order of the two passages along each strand; successor
    // pointers stay put, only crossing references move.
    crossings[over_first].over_in = top.mid;
    crossings[over_first].over_out = top.e_out;
    crossings[over_second].over_in = top.e_in;
    crossings[over_second].over_out = top.mid;
    if mid_forward {
        crossings[over_first].under_in = mid.mid;
        crossings[over_first].under_out = mid.e_out;
        crossings[lower].over_in = mid.e_in;
        crossings[lower].over_out = mid.mid;
    } else {
        crossings[lower].over_in = mid.mid;
        crossings[lower].over_out = mid.e_out;
        crossings[over_first].under_in = mid.e_in;
        crossings[over_first].under_out = mid.mid;
    }
    if bot_forward {
        crossings[over_second].under_in = bot.mid;
        crossings[over_second].under_out = bot.e_out;
        crossings[lower].under_in = bot.e_in;
        crossings[lower].under_out = bot.mid;
    } else {
        crossings[lower].under_in = bot.mid;
        crossings[lower].under_out = bot.e_out;
        crossings[over_second].under_in = bot.e_in;
        crossings[over_second].under_out = bot.mid;
    }

    LinkDiagram::new(d.arcs().to_vec(), crossings, d.component_count())
}

fn crossing_change(d: &LinkDiagram, crossing: CrossingId, require_self: bool) -> Result<LinkDiagram, DiagramError> {
    let c = *d.crossing(crossing)?;
    if require_self && !c.is_self_crossing(d) {
        return Err(DiagramError::NotSelfCrossing(crossing));
    }
    let mut crossings = d.crossings().to_vec();
    crossings[crossing] = Crossing {
        over_in: c.under_in,
        over_out: c.under_out,
        under_in: c.over_in,
        under_out: c.over_out,
        sign: -c.sign,
    };
    LinkDiagram::new(d.arcs().to_vec(), crossings, d.component_count())
}

fn delta_move(d: &LinkDiagram, strands: [ArcId; 3]) -> Result<LinkDiagram, DiagramError> {
    for a in strands {
        d.arc(a)?;
    }
    if strands[0] == strands[1] || strands[0] == strands[2] || strands[1] == strands[2] {
        return Err(DiagramError::InvalidSite("delta move needs three distinct arcs".into()));
    }
    let mut b = Builder::from_diagram(d);
    let mut positions = strands.to_vec();
    b.weave(&mut positions, &DELTA_WEAVE);
    b.finish(d.component_count())
}

/// Kink crossings that an R1 move can remove.
pub fn find_r1_removal_sites(d: &LinkDiagram) -> Vec<CrossingId> {
    d.crossings().iter().enumerate().filter(|(_, c)| is_kink(c)).map(|(i, _)| i).collect()
}

/// Cancelling bigon pairs that an R2 move can remove.
pub fn find_r2_removal_sites(d: &LinkDiagram) -> Vec<(CrossingId, CrossingId)> {
    let mut out = Vec::new();
    for first in 0..d.crossing_count() {
        for second in 0..d.crossing_count() {
            if is_r2_pair(d, first, second) {
                out.push((first, second));
            }
        }
    }
    out
}

/// Valid R3 triangles `(over_first, over_second, lower)`.
pub fn find_r3_sites(d: &LinkDiagram) -> Vec<(CrossingId, CrossingId, CrossingId)> {
    let mut out = Vec::new();
    for c1 in 0..d.crossing_count() {
        for c2 in 0..d.crossing_count() {
            if c1 == c2 || d.crossings()[c1].over_out != d.crossings()[c2].over_in {
                continue;
            }
            for x in 0..d.crossing_count() {
                if x != c1 && x != c2 && r3_sides(d, c1, c2, x).is_ok() {
                    out.push((c1, c2, x));
                }
            }
        }
    }
    out
}

/// Crossings whose strands both belong to one component.
pub fn self_crossing_sites(d: &LinkDiagram) -> Vec<CrossingId> {
    d.crossings().iter().enumerate().filter(|(_, c)| c.is_self_crossing(d)).map(|(i, _)| i).collect()
}

/// Picks one valid random R1/R2/R3 move. Removals and slides are preferred
/// when available so random walks do not just inflate the diagram.
pub fn random_move<R: Rng>(d: &LinkDiagram, rng: &mut R) -> MoveSpec {
    let r3_sites = find_r3_sites(d);
    if !r3_sites.is_empty() && rng.gen_bool(0.5) {
        let (a, b, x) = r3_sites[rng.gen_range(0..r3_sites.len())];
        return MoveSpec::R3 { over_first: a, over_second: b, lower: x };
    }
    let kinks = find_r1_removal_sites(d);
    let bigons = find_r2_removal_sites(d);
    let crowded = d.crossing_count() > 24;
    let mut options = Vec::new();
    if !crowded || (kinks.is_empty() && bigons.is_empty()) {
        options.push(0); // R1 insert
        options.push(1); // R2 insert
    }
    if !kinks.is_empty() {
        options.push(2);
    }
    if !bigons.is_empty() {
        options.push(3);
    }
    match options[rng.gen_range(0..options.len())] {
        0 => MoveSpec::R1Insert {
            arc: rng.gen_range(0..d.arc_count()),
            sign: if rng.gen_bool(0.5) { 1 } else { -1 },
            over_first: rng.gen_bool(0.5),
        },
        1 => MoveSpec::R2Insert {
            over: rng.gen_range(0..d.arc_count()),
            under: rng.gen_range(0..d.arc_count()),
            sign: if rng.gen_bool(0.5) { 1 } else { -1 },
        },
        2 => MoveSpec::R1Remove { crossing: kinks[rng.gen_range(0..kinks.len())] },
        _ => {
            let (a, b) = bigons[rng.gen_range(0..bigons.len())];
            MoveSpec::R2Remove { first: a, second: b }
        }
    }
}

/// Applies `len` random R1/R2/R3 moves. Occasionally sets up a genuine R3
/// triangle by poking a strand across an existing crossing twice, so slides
/// actually occur. Returns the moved diagram and the moves applied.
pub fn random_move_sequence<R: Rng>(d: &LinkDiagram, len: usize, rng: &mut R) -> (LinkDiagram, Vec<MoveSpec>) {
    let mut cur = d.clone();
    let mut applied = Vec::new();
    while applied.len() < len {
        // R2-insert ids are stable, so a two-poke setup can target a
        // crossing picked now and finish on the next apply.
        let can_setup = cur.crossing_count() > 0 && len - applied.len() >= 2;
        if can_setup && find_r3_sites(&cur).is_empty() && rng.gen_bool(0.35) {
            let x = rng.gen_range(0..cur.crossing_count());
            let target1 = cur.crossings()[x].over_in;
            let poker = rng.gen_range(0..cur.arc_count());
            if poker != target1 && poker != cur.crossings()[x].over_out {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let m1 = MoveSpec::R2Insert { over: poker, under: target1, sign };
                let step1 = apply_move(&cur, &m1).expect("valid poke");
                // continue with the poking strand's tail over the arc
                // leaving the lower crossing
                let tail = step1.crossings()[step1.crossing_count() - 1].over_out;
                let target2 = step1.crossings()[x].under_out;
                if tail != target2 && step1.crossings()[x].under_in != tail {
                    let m2 = MoveSpec::R2Insert { over: tail, under: target2, sign };
                    let step2 = apply_move(&step1, &m2).expect("valid poke");
                    applied.push(m1);
                    applied.push(m2);
                    cur = step2;
                    continue;
                }
            }
        }
        let m = random_move(&cur, rng);
        cur = apply_move(&cur, &m).expect("generated moves are valid");
        applied.push(m);
    }
    (cur, applied)
}
