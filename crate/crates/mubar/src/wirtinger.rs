//! Wirtinger presentations read off a diagram.
//!
//! Arcs joined across over-passages form one generator per maximal
//! overpass; every crossing contributes one conjugation relation
//! `next = over^e * prev * over^-e` with `e` the crossing sign. One base
//! generator per component plays the role of the chosen meridian, and each
//! generator carries the conjugator word that expresses it from its
//! component's base generator by chaining relations along the component.

use crate::diagram::{ArcId, CrossingId, LinkDiagram};
use crate::error::DiagramError;
use crate::linking;
use crate::word::FreeWord;

/// A Wirtinger generator: one maximal overpass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    /// Lowest arc id on the overpass.
    pub arc: ArcId,
    pub component: usize,
}

/// The relation attached to one crossing: `next = over^sign prev over^-sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub crossing: CrossingId,
    pub prev: usize,
    pub over: usize,
    pub next: usize,
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct WirtingerPresentation {
    generators: Vec<Generator>,
    arc_to_generator: Vec<usize>,
    relations: Vec<Relation>,
    /// Chosen base arc per component (the meridian's overpass).
    base_arcs: Vec<ArcId>,
    base_generators: Vec<usize>,
    /// Conjugator of each generator, a word in generator letters; empty for
    /// base generators.
    conjugators: Vec<FreeWord>,
}

impl WirtingerPresentation {
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn generator_of_arc(&self, arc: ArcId) -> usize {
        self.arc_to_generator[arc]
    }

    pub fn base_arc(&self, component: usize) -> ArcId {
        self.base_arcs[component - 1]
    }

    pub fn base_generator(&self, component: usize) -> usize {
        self.base_generators[component - 1]
    }

    pub fn conjugator(&self, generator: usize) -> &FreeWord {
        &self.conjugators[generator]
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }
}

/// Builds the presentation with the default meridian choice: the lowest
/// arc id of each component.
pub fn presentation(d: &LinkDiagram) -> WirtingerPresentation {
    presentation_with_bases(d, &d.first_arcs()).expect("default bases are valid")
}

/// Builds the presentation with a chosen base arc per component.
pub fn presentation_with_bases(d: &LinkDiagram, base_arcs: &[ArcId]) -> Result<WirtingerPresentation, DiagramError> {
    if base_arcs.len() != d.component_count() {
        return Err(DiagramError::ComponentOutOfRange { index: base_arcs.len(), count: d.component_count() });
    }
    for (idx, &arc) in base_arcs.iter().enumerate() {
        let a = d.arc(arc)?;
        if a.component != idx + 1 {
            return Err(DiagramError::BadIncidence { arc, detail: format!("base arc must lie on component {}", idx + 1) });
        }
    }

    // Union arcs across over-passages.
    let mut parent: Vec<usize> = (0..d.arc_count()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for c in d.crossings() {
        let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut rep_to_gen = vec![usize::MAX; d.arc_count()];
    let mut generators = Vec::new();
    let mut arc_to_generator = vec![usize::MAX; d.arc_count()];
    for arc in 0..d.arc_count() {
        let rep = find(&mut parent, arc);
        if rep_to_gen[rep] == usize::MAX {
            rep_to_gen[rep] = generators.len();
            generators.push(Generator { arc: rep, component: d.arcs()[rep].component });
        }
        arc_to_generator[arc] = rep_to_gen[rep];
    }

    let relations: Vec<Relation> = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(cid, c)| Relation {
            crossing: cid,
            prev: arc_to_generator[c.under_in],
            over: arc_to_generator[c.over_in],
            next: arc_to_generator[c.under_out],
            sign: c.sign,
        })
        .collect();

    let base_generators: Vec<usize> = base_arcs.iter().map(|&a| arc_to_generator[a]).collect();

    // Conjugators: walk each component from its base arc; passing under a
    // crossing with over-letter o and sign e turns a conjugator C into
    // (o^e) C for the next overpass.
    let mut conjugators = vec![FreeWord::empty(); generators.len()];
    for comp in 1..=d.component_count() {
        let base_gen = base_generators[comp - 1];
        let mut current = FreeWord::empty();
        let mut arc = base_arcs[comp - 1];
        loop {
            if let Some(p) = d.end_of(arc) {
                if !p.over {
                    let c = &d.crossings()[p.crossing];
                    let over_gen = arc_to_generator[c.over_in];
                    let letter = FreeWord::generator(over_gen, c.sign < 0);
                    current = letter.concat(&current);
                    let next_gen = arc_to_generator[c.under_out];
                    if next_gen != base_gen {
                        conjugators[next_gen] = current.clone();
                    }
                }
            }
            arc = d.next(arc);
            if arc == base_arcs[comp - 1] {
                break;
            }
        }
    }

    Ok(WirtingerPresentation {
        generators,
        arc_to_generator,
        relations,
        base_arcs: base_arcs.to_vec(),
        base_generators,
        conjugators,
    })
}

/// The longitude of a component read straight off the diagram: traverse
/// from the base arc and record `over^sign` at every underpass. A word in
/// generator letters.
///
/// Letters compose right-to-left in traversal order, the same composition
/// direction the conjugator chains use; the forward product is not
/// move-invariant (a kink on a conjugated overpass shifts higher
/// coefficients).
pub fn raw_longitude(d: &LinkDiagram, p: &WirtingerPresentation, component: usize) -> Result<FreeWord, DiagramError> {
    d.check_component(component)?;
    let start = p.base_arc(component);
    let mut word = FreeWord::empty();
    let mut arc = start;
    loop {
        if let Some(passage) = d.end_of(arc) {
            if !passage.over {
                let c = &d.crossings()[passage.crossing];
                let letter = FreeWord::generator(p.generator_of_arc(c.over_in), c.sign < 0);
                word = letter.concat(&word);
            }
        }
        arc = d.next(arc);
        if arc == start {
            break;
        }
    }
    Ok(word)
}

/// The preferred longitude: the raw longitude with the base meridian power
/// `m^{-w}` appended, `w` the component's writhe. Its degree-one Magnus
/// coefficient in its own variable vanishes.
pub fn preferred_longitude(d: &LinkDiagram, p: &WirtingerPresentation, component: usize) -> Result<FreeWord, DiagramError> {
    let raw = raw_longitude(d, p, component)?;
    let w = linking::writhe_component(d, component)?;
    let correction = FreeWord::generator(p.base_generator(component), false).pow(-w);
    Ok(raw.concat(&correction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn crossingless_unknot_has_one_generator_no_relations() {
        let d = fixtures::unlink(1);
        let p = presentation(&d);
        assert_eq!(p.generator_count(), 1);
        assert!(p.relations().is_empty());
        assert!(raw_longitude(&d, &p, 1).unwrap().is_empty());
        assert!(preferred_longitude(&d, &p, 1).unwrap().is_empty());
    }

    #[test]
    fn borromean_presentation_shape() {
        let d = fixtures::borromean();
        let p = presentation(&d);
        assert_eq!(p.generator_count(), 6);
        assert_eq!(p.relations().len(), 6);
        for comp in 1..=3 {
            assert_eq!(p.generators().iter().filter(|g| g.component == comp).count(), 2);
        }
        // each component is conjugated twice by one fixed other component,
        // in the cyclic pattern 1 <- 3, 2 <- 1, 3 <- 2
        let mut pairs: Vec<(usize, usize)> = p
            .relations()
            .iter()
            .map(|r| (p.generators()[r.prev].component, p.generators()[r.over].component))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 3), (1, 3), (2, 1), (2, 1), (3, 2), (3, 2)]);
    }

    #[test]
    fn hopf_presentation_is_two_arcs_per_component_two_relations() {
        let d = fixtures::hopf();
        for comp in 1..=2 {
            assert_eq!(d.component_arcs(comp).unwrap().len(), 2);
        }
        let p = presentation(&d);
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relations().len(), 2);
    }

    #[test]
    fn borromean_longitude_is_a_two_letter_word() {
        let d = fixtures::borromean();
        let p = presentation(&d);
        let raw = raw_longitude(&d, &p, 3).unwrap();
        assert_eq!(raw.len(), 2);
        // zero writhe: no correction
        assert_eq!(preferred_longitude(&d, &p, 3).unwrap(), raw);
    }

    #[test]
    fn kinked_unknot_longitude_is_its_own_overpass() {
        let d = crate::diagram::apply_move(
            &fixtures::unlink(1),
            &crate::diagram::MoveSpec::R1Insert { arc: 0, sign: 1, over_first: false },
        )
        .unwrap();
        let p = presentation(&d);
        assert_eq!(p.generator_count(), 1);
        let raw = raw_longitude(&d, &p, 1).unwrap();
        assert_eq!(raw.len(), 1);
        let (gen, inv) = raw.letters().next().unwrap();
        assert_eq!(p.generators()[gen].component, 1);
        assert!(!inv);
        // the correction m^-1 cancels the single positive letter
        assert!(preferred_longitude(&d, &p, 1).unwrap().is_empty());
    }

    #[test]
    fn base_arcs_can_be_rotated() {
        let d = fixtures::borromean();
        let arcs = d.component_arcs(1).unwrap();
        let mut bases = d.first_arcs();
        bases[0] = arcs[1];
        let p = presentation_with_bases(&d, &bases).unwrap();
        assert_eq!(p.base_arc(1), arcs[1]);
    }

    #[test]
    fn base_arc_on_wrong_component_is_rejected() {
        let d = fixtures::hopf();
        let mut bases = d.first_arcs();
        bases.swap(0, 1);
        assert!(presentation_with_bases(&d, &bases).is_err());
    }
}
