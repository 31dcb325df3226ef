//! Mutable scratch representation used while constructing or rewriting a
//! diagram. Arcs and crossings live in grow-only slots; `finish` dissolves
//! redundant arc boundaries, compacts ids and validates.

use super::{Arc, ArcId, Crossing, CrossingId, LinkDiagram};
use crate::error::DiagramError;

#[derive(Clone, Debug)]
pub(crate) struct Builder {
    arcs: Vec<Option<Arc>>,
    crossings: Vec<Option<Crossing>>,
}

impl Builder {
    pub fn new() -> Self {
        Self { arcs: Vec::new(), crossings: Vec::new() }
    }

    pub fn from_diagram(d: &LinkDiagram) -> Self {
        Self {
            arcs: d.arcs().iter().copied().map(Some).collect(),
            crossings: d.crossings().iter().copied().map(Some).collect(),
        }
    }

    pub fn arc(&self, id: ArcId) -> &Arc {
        self.arcs[id].as_ref().expect("live arc")
    }

    fn arc_mut(&mut self, id: ArcId) -> &mut Arc {
        self.arcs[id].as_mut().expect("live arc")
    }

    pub fn crossing(&self, id: CrossingId) -> &Crossing {
        self.crossings[id].as_ref().expect("live crossing")
    }

    pub fn new_arc(&mut self, component: usize, next: ArcId) -> ArcId {
        self.arcs.push(Some(Arc { component, next }));
        self.arcs.len() - 1
    }

    /// A fresh one-arc crossingless loop.
    pub fn new_loop(&mut self, component: usize) -> ArcId {
        let id = self.arcs.len();
        self.arcs.push(Some(Arc { component, next: id }));
        id
    }

    pub fn set_component(&mut self, arc: ArcId, component: usize) {
        self.arc_mut(arc).component = component;
    }

    pub fn set_next(&mut self, arc: ArcId, next: ArcId) {
        self.arc_mut(arc).next = next;
    }

    pub fn add_crossing(&mut self, c: Crossing) -> CrossingId {
        self.crossings.push(Some(c));
        self.crossings.len() - 1
    }

    pub fn remove_crossing(&mut self, id: CrossingId) {
        self.crossings[id] = None;
    }

    pub fn live_crossings(&self) -> impl Iterator<Item = (CrossingId, &Crossing)> {
        self.crossings.iter().enumerate().filter_map(|(i, c)| c.as_ref().map(|c| (i, c)))
    }

    fn ends_at_crossing(&self, arc: ArcId) -> bool {
        self.live_crossings().any(|(_, c)| c.over_in == arc || c.under_in == arc)
    }

    fn begins_at_crossing(&self, arc: ArcId) -> bool {
        self.live_crossings().any(|(_, c)| c.over_out == arc || c.under_out == arc)
    }

    /// Moves the in-end of `old` to `new` wherever a crossing references it.
    fn retarget_end(&mut self, old: ArcId, new: ArcId) {
        for c in self.crossings.iter_mut().flatten() {
            if c.over_in == old {
                c.over_in = new;
            }
            if c.under_in == old {
                c.under_in = new;
            }
        }
    }

    /// Splits arc `a`, inserting a fresh arc between `a` and its successor.
    /// The crossing that `a` used to end at now ends the fresh arc, so `a`
    /// is left dangling, ready to enter a new crossing.
    pub fn split_after(&mut self, a: ArcId) -> ArcId {
        let Arc { component, next } = *self.arc(a);
        let fresh = self.new_arc(component, next);
        self.set_next(a, fresh);
        self.retarget_end(a, fresh);
        fresh
    }

    /// Weaves a braid word into the diagram. `positions[p]` is the arc
    /// currently occupying strand position `p`; each letter `+g`/`-g`
    /// crosses positions `g` and `g+1` (1-based), positive letters putting
    /// the lower-position strand on top. Positions are updated in place.
    pub fn weave(&mut self, positions: &mut [ArcId], word: &[i32]) {
        for &letter in word {
            let g = letter.unsigned_abs() as usize;
            debug_assert!(g >= 1 && g < positions.len() + 1);
            let (lo, hi) = (positions[g - 1], positions[g]);
            if letter > 0 {
                let over_out = self.split_after(lo);
                let under_out = self.split_after(hi);
                self.add_crossing(Crossing { over_in: lo, over_out, under_in: hi, under_out, sign: 1 });
                positions[g - 1] = under_out;
                positions[g] = over_out;
            } else {
                let over_out = self.split_after(hi);
                let under_out = self.split_after(lo);
                self.add_crossing(Crossing { over_in: hi, over_out, under_in: lo, under_out, sign: -1 });
                positions[g - 1] = over_out;
                positions[g] = under_out;
            }
        }
    }

    /// Merges arc boundaries that no longer carry a crossing passage, so
    /// that every surviving arc either meets crossings at both ends or is a
    /// lone crossingless loop.
    pub fn dissolve(&mut self) {
        loop {
            let candidate = self
                .arcs
                .iter()
                .enumerate()
                .filter_map(|(id, a)| a.as_ref().map(|a| (id, a.next)))
                .find(|&(id, next)| {
                    id != next && !self.ends_at_crossing(id) && !self.begins_at_crossing(next)
                });
            let Some((a, b)) = candidate else { break };
            let b_next = self.arc(b).next;
            self.set_next(a, if b_next == b { a } else { b_next });
            self.retarget_end(b, a);
            self.arcs[b] = None;
        }
    }

    /// Dissolves, compacts ids (keeping relative order) and validates.
    pub fn finish(mut self, component_count: usize) -> Result<LinkDiagram, DiagramError> {
        self.dissolve();
        let mut arc_map = vec![usize::MAX; self.arcs.len()];
        let mut arcs = Vec::new();
        for (old, slot) in self.arcs.iter().enumerate() {
            if let Some(a) = slot {
                arc_map[old] = arcs.len();
                arcs.push(*a);
            }
        }
        for a in arcs.iter_mut() {
            a.next = arc_map[a.next];
        }
        let crossings = self
            .crossings
            .iter()
            .flatten()
            .map(|c| Crossing {
                over_in: arc_map[c.over_in],
                over_out: arc_map[c.over_out],
                under_in: arc_map[c.under_in],
                under_out: arc_map[c.under_out],
                sign: c.sign,
            })
            .collect();
        LinkDiagram::new(arcs, crossings, component_count)
    }
}
