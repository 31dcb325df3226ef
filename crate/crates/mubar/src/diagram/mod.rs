//! Combinatorial link diagrams.
//!
//! A diagram is a set of oriented arcs (edge segments between crossing
//! passages) chained into one cycle per link component, plus a set of signed
//! crossings. Every crossing references four arc ends: the over strand enters
//! on `over_in` and leaves on `over_out`, the under strand on `under_in` /
//! `under_out`. An arc that never meets a crossing forms a one-arc cycle.
//!
//! Components are indexed 1-based. Crossing signs follow the right-hand
//! convention: a crossing is `+1` when the frame (over tangent, under
//! tangent, axis from under to over) is positively oriented; the closure of
//! the braid word `1 1` then has linking number `+1`.

mod braid;
mod builder;
mod cable;
mod moves;
mod pd;

pub use braid::{braid_permutation, parse_braid};
pub use cable::{band_sum, double_component};
pub use moves::{
    apply_move, find_r1_removal_sites, find_r2_removal_sites, find_r3_sites, random_move,
    random_move_sequence, self_crossing_sites, MoveSpec,
};
pub use pd::{emit_pd, parse_pd};

pub(crate) use builder::Builder;

use crate::error::DiagramError;

pub type ArcId = usize;
pub type CrossingId = usize;

/// One oriented arc: its component and the arc that follows it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub component: usize,
    pub next: ArcId,
}

/// A signed crossing with its four incident arc ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub over_in: ArcId,
    pub over_out: ArcId,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub sign: i8,
}

impl Crossing {
    pub fn is_self_crossing(&self, d: &LinkDiagram) -> bool {
        d.arcs[self.over_in].component == d.arcs[self.under_in].component
    }
}

/// Where an arc end meets a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: CrossingId,
    pub over: bool,
}

/// An oriented multi-component link diagram. Immutable after construction;
/// every operation that changes a diagram returns a fresh one.
#[derive(Clone)]
pub struct LinkDiagram {
    arcs: Vec<Arc>,
    crossings: Vec<Crossing>,
    component_count: usize,
    // Derived incidence: the passage each arc ends at / begins at.
    ends: Vec<Option<Passage>>,
    begins: Vec<Option<Passage>>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.arcs == other.arcs
            && self.crossings == other.crossings
            && self.component_count == other.component_count
    }
}

impl Eq for LinkDiagram {}

impl std::fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinkDiagram")
            .field("components", &self.component_count)
            .field("arcs", &self.arcs)
            .field("crossings", &self.crossings)
            .finish()
    }
}

impl LinkDiagram {
    /// Validates the raw data and builds the diagram.
    pub fn new(arcs: Vec<Arc>, crossings: Vec<Crossing>, component_count: usize) -> Result<Self, DiagramError> {
        if component_count == 0 || arcs.is_empty() {
            return Err(DiagramError::Empty);
        }
        let n = arcs.len();
        for (id, a) in arcs.iter().enumerate() {
            if a.component == 0 || a.component > component_count {
                return Err(DiagramError::ComponentOutOfRange { index: a.component, count: component_count });
            }
            if a.next >= n {
                return Err(DiagramError::BadIncidence { arc: id, detail: format!("successor {} out of range", a.next) });
            }
        }

        // `next` must be a permutation whose cycles are the components.
        let mut pred_count = vec![0usize; n];
        for a in &arcs {
            pred_count[a.next] += 1;
        }
        if pred_count.iter().any(|&c| c != 1) {
            return Err(DiagramError::BrokenCycles);
        }
        let mut cycle_of = vec![usize::MAX; n];
        let mut cycles: Vec<Vec<ArcId>> = Vec::new();
        for start in 0..n {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let idx = cycles.len();
            let mut cur = start;
            let mut cycle = Vec::new();
            loop {
                cycle_of[cur] = idx;
                cycle.push(cur);
                cur = arcs[cur].next;
                if cur == start {
                    break;
                }
                if cycle_of[cur] != usize::MAX {
                    return Err(DiagramError::BrokenCycles);
                }
            }
            cycles.push(cycle);
        }
        if cycles.len() != component_count {
            return Err(DiagramError::BrokenCycles);
        }
        let mut seen_component = vec![false; component_count];
        for cycle in &cycles {
            let comp = arcs[cycle[0]].component;
            if cycle.iter().any(|&a| arcs[a].component != comp) {
                return Err(DiagramError::BrokenCycles);
            }
            if seen_component[comp - 1] {
                return Err(DiagramError::BrokenCycles);
            }
            seen_component[comp - 1] = true;
        }

        // Crossing incidence: out arcs follow in arcs, each arc end is used
        // at most once, and a component either has all arcs at crossings or
        // is a single crossingless cycle.
        let mut ends: Vec<Option<Passage>> = vec![None; n];
        let mut begins: Vec<Option<Passage>> = vec![None; n];
        for (cid, c) in crossings.iter().enumerate() {
            for arc in [c.over_in, c.over_out, c.under_in, c.under_out] {
                if arc >= n {
                    return Err(DiagramError::BadCrossing { crossing: cid, detail: format!("arc {arc} out of range") });
                }
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadCrossing { crossing: cid, detail: format!("sign {} not +1/-1", c.sign) });
            }
            if arcs[c.over_in].next != c.over_out {
                return Err(DiagramError::BadCrossing { crossing: cid, detail: "over_out does not follow over_in".into() });
            }
            if arcs[c.under_in].next != c.under_out {
                return Err(DiagramError::BadCrossing { crossing: cid, detail: "under_out does not follow under_in".into() });
            }
            for (arc, over) in [(c.over_in, true), (c.under_in, false)] {
                if ends[arc].is_some() {
                    return Err(DiagramError::BadIncidence { arc, detail: "arc ends at two crossings".into() });
                }
                ends[arc] = Some(Passage { crossing: cid, over });
            }
            for (arc, over) in [(c.over_out, true), (c.under_out, false)] {
                if begins[arc].is_some() {
                    return Err(DiagramError::BadIncidence { arc, detail: "arc begins at two crossings".into() });
                }
                begins[arc] = Some(Passage { crossing: cid, over });
            }
        }
        for cycle in &cycles {
            let with_end = cycle.iter().filter(|&&a| ends[a].is_some()).count();
            if with_end == 0 {
                if cycle.len() != 1 {
                    return Err(DiagramError::BadIncidence {
                        arc: cycle[0],
                        detail: "crossingless component must be a single arc".into(),
                    });
                }
            } else if with_end != cycle.len() {
                return Err(DiagramError::BadIncidence {
                    arc: cycle[0],
                    detail: "component mixes arcs with and without crossings".into(),
                });
            }
        }

        Ok(Self { arcs, crossings, component_count, ends, begins })
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc(&self, id: ArcId) -> Result<&Arc, DiagramError> {
        self.arcs.get(id).ok_or(DiagramError::UnknownArc(id))
    }

    pub fn crossing(&self, id: CrossingId) -> Result<&Crossing, DiagramError> {
        self.crossings.get(id).ok_or(DiagramError::UnknownCrossing(id))
    }

    pub fn next(&self, arc: ArcId) -> ArcId {
        self.arcs[arc].next
    }

    /// Passage the arc ends at, if its head meets a crossing.
    pub fn end_of(&self, arc: ArcId) -> Option<Passage> {
        self.ends[arc]
    }

    /// Passage the arc begins at, if its tail leaves a crossing.
    pub fn begin_of(&self, arc: ArcId) -> Option<Passage> {
        self.begins[arc]
    }

    pub fn check_component(&self, component: usize) -> Result<(), DiagramError> {
        if component == 0 || component > self.component_count {
            return Err(DiagramError::ComponentOutOfRange { index: component, count: self.component_count });
        }
        Ok(())
    }

    /// Arcs of one component in cycle order, starting from its lowest arc id.
    pub fn component_arcs(&self, component: usize) -> Result<Vec<ArcId>, DiagramError> {
        self.check_component(component)?;
        let start = (0..self.arcs.len())
            .find(|&a| self.arcs[a].component == component)
            .ok_or(DiagramError::BrokenCycles)?;
        let mut out = vec![start];
        let mut cur = self.arcs[start].next;
        while cur != start {
            out.push(cur);
            cur = self.arcs[cur].next;
        }
        Ok(out)
    }

    /// Lowest arc id on each component, indexed by component - 1.
    pub fn first_arcs(&self) -> Vec<ArcId> {
        let mut firsts = vec![usize::MAX; self.component_count];
        for (id, a) in self.arcs.iter().enumerate() {
            let slot = &mut firsts[a.component - 1];
            if *slot == usize::MAX {
                *slot = id;
            }
        }
        firsts
    }

    /// Reverses the orientation of one component. Successor pointers along it
    /// flip, its passages swap in/out roles, and the sign of every crossing
    /// between the component and another one is recomputed.
    pub fn reverse_component(&self, component: usize) -> Result<LinkDiagram, DiagramError> {
        self.check_component(component)?;
        let mut arcs = self.arcs.clone();
        // each arc of the component shows up as a successor exactly once,
        // so this assigns every reversed pointer exactly once
        for (id, old) in self.arcs.iter().enumerate() {
            if old.component == component {
                arcs[old.next].next = id;
            }
        }
        let mut crossings = self.crossings.clone();
        for c in crossings.iter_mut() {
            let over_rev = self.arcs[c.over_in].component == component;
            let under_rev = self.arcs[c.under_in].component == component;
            if over_rev {
                std::mem::swap(&mut c.over_in, &mut c.over_out);
            }
            if under_rev {
                std::mem::swap(&mut c.under_in, &mut c.under_out);
            }
            if over_rev != under_rev {
                c.sign = -c.sign;
            }
        }
        LinkDiagram::new(arcs, crossings, self.component_count)
    }
}

/// Convenience for orientation-reversal as a free function, mirroring the
/// other diagram operations.
pub fn reverse_component(d: &LinkDiagram, component: usize) -> Result<LinkDiagram, DiagramError> {
    d.reverse_component(component)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reverse_twice_is_identity() {
        let d = fixtures::borromean();
        let r = d.reverse_component(2).unwrap().reverse_component(2).unwrap();
        assert_eq!(r, d);
    }

    #[test]
    fn reverse_flips_inter_component_signs_only() {
        let d = fixtures::whitehead();
        let r = d.reverse_component(1).unwrap();
        for (c, rc) in d.crossings().iter().zip(r.crossings()) {
            let over_c = d.arcs()[c.over_in].component;
            let under_c = d.arcs()[c.under_in].component;
            if (over_c == 1) != (under_c == 1) {
                assert_eq!(rc.sign, -c.sign);
            } else {
                assert_eq!(rc.sign, c.sign);
            }
        }
    }

    #[test]
    fn reverse_rejects_bad_component() {
        let d = fixtures::hopf();
        assert!(d.reverse_component(3).is_err());
    }

    #[test]
    fn component_arcs_start_from_lowest_id() {
        let d = fixtures::borromean();
        for comp in 1..=3 {
            let arcs = d.component_arcs(comp).unwrap();
            assert_eq!(arcs[0], *arcs.iter().min().unwrap());
            assert_eq!(arcs.len(), 4);
        }
    }
}
