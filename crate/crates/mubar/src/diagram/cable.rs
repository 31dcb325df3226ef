//! Component doubling (zero-framed parallel copies) and band sums.

use std::collections::HashMap;

use super::{ArcId, Builder, Crossing, LinkDiagram};
use crate::error::DiagramError;
use crate::linking;

/// Adds component `n+1` as a parallel copy of component `i` with linking
/// number zero against it.
///
/// The copy runs alongside the original on its left. Every passage of the
/// original strand is doubled next to it (a self-crossing becomes a 2x2
/// grid of four), which yields the blackboard-framed parallel; `-w` clasp
/// twists are then woven between the two strands, `w` being the writhe of
/// the original component, killing the framing contribution.
pub fn double_component(d: &LinkDiagram, component: usize) -> Result<LinkDiagram, DiagramError> {
    d.check_component(component)?;
    let n = d.component_count();
    let writhe = linking::writhe_component(d, component)?;

    let mut b = Builder::from_diagram(d);

    // Twin arcs mirror the component's cycle. The map stays keyed by the
    // near piece when edges split, which keeps it aligned with the ribbon.
    let comp_arcs = d.component_arcs(component)?;
    let mut twin: HashMap<ArcId, ArcId> = HashMap::new();
    for &a in &comp_arcs {
        twin.insert(a, b.new_loop(n + 1));
    }
    for &a in &comp_arcs {
        let t = twin[&a];
        let t_next = twin[&d.next(a)];
        b.set_next(t, t_next);
    }

    for cid in 0..d.crossing_count() {
        let cur = *b.crossing(cid);
        let s = cur.sign;
        let over_doubled = b.arc(cur.over_in).component == component;
        let under_doubled = b.arc(cur.under_in).component == component;
        match (over_doubled, under_doubled) {
            (false, false) => {}
            (true, false) => {
                // copy passes over the same strand, adjacent to the original
                let (toi, too) = (twin[&cur.over_in], twin[&cur.over_out]);
                debug_assert_eq!(b.arc(toi).next, too);
                let (under_in, under_out) = if s > 0 {
                    let w = cur.under_out;
                    (w, b.split_after(w))
                } else {
                    let v = cur.under_in;
                    (v, b.split_after(v))
                };
                b.add_crossing(Crossing { over_in: toi, over_out: too, under_in, under_out, sign: s });
            }
            (false, true) => {
                // copy passes under the same strand
                let (tui, tuo) = (twin[&cur.under_in], twin[&cur.under_out]);
                debug_assert_eq!(b.arc(tui).next, tuo);
                let (over_in, over_out) = if s > 0 {
                    let oi = cur.over_in;
                    (oi, b.split_after(oi))
                } else {
                    let oo = cur.over_out;
                    (oo, b.split_after(oo))
                };
                b.add_crossing(Crossing { over_in, over_out, under_in: tui, under_out: tuo, sign: s });
            }
            (true, true) => {
                // self-crossing: original x copy make a grid of four
                let (tui, tuo) = (twin[&cur.under_in], twin[&cur.under_out]);
                let (toi, too) = (twin[&cur.over_in], twin[&cur.over_out]);
                debug_assert_eq!(b.arc(tui).next, tuo);
                debug_assert_eq!(b.arc(toi).next, too);
                let tmid = b.split_after(tui);
                let tmid2 = b.split_after(toi);
                if s > 0 {
                    let uo = cur.under_out;
                    let nw = b.split_after(uo);
                    let oi = b.crossing(cid).over_in; // re-read: a kink may share edges
                    let m = b.split_after(oi);
                    // original-over x copy-under, copy self-crossing,
                    // copy-over x original-under
                    b.add_crossing(Crossing { over_in: oi, over_out: m, under_in: tui, under_out: tmid, sign: s });
                    b.add_crossing(Crossing { over_in: toi, over_out: tmid2, under_in: tmid, under_out: tuo, sign: s });
                    b.add_crossing(Crossing { over_in: tmid2, over_out: too, under_in: uo, under_out: nw, sign: s });
                    twin.insert(nw, tuo);
                } else {
                    let oo = cur.over_out;
                    let m_o = b.split_after(oo);
                    let ui = b.crossing(cid).under_in; // re-read
                    let m_u = b.split_after(ui);
                    b.add_crossing(Crossing { over_in: oo, over_out: m_o, under_in: tmid, under_out: tuo, sign: s });
                    b.add_crossing(Crossing { over_in: tmid2, over_out: too, under_in: tui, under_out: tmid, sign: s });
                    b.add_crossing(Crossing { over_in: toi, over_out: tmid2, under_in: ui, under_out: m_u, sign: s });
                    twin.insert(m_o, too);
                }
            }
        }
    }

    // Framing correction: the blackboard parallel links the original by its
    // writhe, so weave that many cancelling full twists between the two.
    if writhe != 0 {
        let anchor = comp_arcs[0];
        let twist_sign: i32 = if writhe > 0 { -1 } else { 1 };
        let word = vec![twist_sign; 2 * writhe.unsigned_abs() as usize];
        let mut positions = vec![anchor, twin[&anchor]];
        b.weave(&mut positions, &word);
    }

    b.finish(n + 1)
}

/// Joins two diagrams with the same component count by a componentwise
/// connected sum along plain untwisted bands, component `i` of `d1` to
/// component `i` of `d2`.
pub fn band_sum(d1: &LinkDiagram, d2: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
    let n = d1.component_count();
    if n != d2.component_count() {
        return Err(DiagramError::ComponentMismatch(n, d2.component_count()));
    }
    let shift = d1.arc_count();
    let mut b = Builder::from_diagram(d1);
    for a in d2.arcs() {
        b.new_arc(a.component, a.next + shift);
    }
    for c in d2.crossings() {
        b.add_crossing(Crossing {
            over_in: c.over_in + shift,
            over_out: c.over_out + shift,
            under_in: c.under_in + shift,
            under_out: c.under_out + shift,
            sign: c.sign,
        });
    }
    let firsts1 = d1.first_arcs();
    let firsts2 = d2.first_arcs();
    for comp in 0..n {
        // cut both components mid-arc and cross-join the loose ends
        let a = firsts1[comp];
        let c = firsts2[comp] + shift;
        let fa = b.split_after(a);
        let fc = b.split_after(c);
        b.set_next(a, fc);
        b.set_next(c, fa);
    }
    b.finish(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linking::{lk, linking_matrix, writhe_component};

    #[test]
    fn doubling_a_crossingless_loop_gives_two_parallel_circles() {
        let d = fixtures::unlink(1);
        let doubled = double_component(&d, 1).unwrap();
        assert_eq!(doubled.component_count(), 2);
        assert_eq!(doubled.crossing_count(), 0);
        assert_eq!(lk(&doubled, 1, 2).unwrap(), 0);
    }

    #[test]
    fn doubling_a_kinked_unknot_inserts_a_cancelling_clasp() {
        let d = crate::diagram::apply_move(
            &fixtures::unlink(1),
            &crate::diagram::MoveSpec::R1Insert { arc: 0, sign: 1, over_first: false },
        )
        .unwrap();
        assert_eq!(writhe_component(&d, 1).unwrap(), 1);
        let doubled = double_component(&d, 1).unwrap();
        assert_eq!(doubled.component_count(), 2);
        // 2x2 grid from the kink plus one two-crossing clasp
        assert_eq!(doubled.crossing_count(), 6);
        assert_eq!(lk(&doubled, 1, 2).unwrap(), 0);
    }

    #[test]
    fn doubling_keeps_the_copy_unlinked_on_every_fixture() {
        for d in [fixtures::hopf(), fixtures::trefoil(), fixtures::borromean(), fixtures::whitehead()] {
            let n = d.component_count();
            for comp in 1..=n {
                let doubled = double_component(&d, comp).unwrap();
                assert_eq!(doubled.component_count(), n + 1);
                assert_eq!(lk(&doubled, comp, n + 1).unwrap(), 0, "component {comp}");
                // other linking numbers are inherited
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            assert_eq!(lk(&doubled, i, j).unwrap(), lk(&d, i, j).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn band_sum_needs_matching_component_counts() {
        let err = band_sum(&fixtures::hopf(), &fixtures::unlink(3)).unwrap_err();
        assert!(matches!(err, DiagramError::ComponentMismatch(2, 3)));
    }

    #[test]
    fn band_sum_with_unlink_changes_nothing_linking_wise() {
        let d = fixtures::borromean();
        let summed = band_sum(&fixtures::unlink(3), &d).unwrap();
        assert_eq!(summed.component_count(), 3);
        assert_eq!(linking_matrix(&summed), linking_matrix(&d));
    }

    #[test]
    fn band_sum_of_hopf_links_doubles_lk() {
        let summed = band_sum(&fixtures::hopf(), &fixtures::hopf()).unwrap();
        assert_eq!(lk(&summed, 1, 2).unwrap(), 2);
    }
}
