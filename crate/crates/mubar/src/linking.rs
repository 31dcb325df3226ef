//! Linking numbers, writhe and the linking matrix, straight off the
//! crossing list.

use std::fmt;

use crate::diagram::LinkDiagram;
use crate::error::DiagramError;

/// Linking number of components `i` and `j`: the signed count of crossings
/// where `i` passes over `j`.
pub fn lk(d: &LinkDiagram, i: usize, j: usize) -> Result<i64, DiagramError> {
    d.check_component(i)?;
    d.check_component(j)?;
    if i == j {
        return Err(DiagramError::EqualComponents);
    }
    let mut total = 0i64;
    for c in d.crossings() {
        if d.arcs()[c.over_in].component == i && d.arcs()[c.under_in].component == j {
            total += c.sign as i64;
        }
    }
    Ok(total)
}

/// Half the signed count over all crossings between the two components.
/// Agrees with [`lk`] on any diagram of an actual link.
pub fn lk_symmetrized(d: &LinkDiagram, i: usize, j: usize) -> Result<i64, DiagramError> {
    d.check_component(i)?;
    d.check_component(j)?;
    if i == j {
        return Err(DiagramError::EqualComponents);
    }
    let mut total = 0i64;
    for c in d.crossings() {
        let oc = d.arcs()[c.over_in].component;
        let uc = d.arcs()[c.under_in].component;
        if (oc == i && uc == j) || (oc == j && uc == i) {
            total += c.sign as i64;
        }
    }
    Ok(total / 2)
}

/// Signed count of the component's self-crossings. Diagram-dependent (an R1
/// kink shifts it), so never part of invariance checks.
pub fn writhe_component(d: &LinkDiagram, i: usize) -> Result<i64, DiagramError> {
    d.check_component(i)?;
    let mut total = 0i64;
    for c in d.crossings() {
        if d.arcs()[c.over_in].component == i && d.arcs()[c.under_in].component == i {
            total += c.sign as i64;
        }
    }
    Ok(total)
}

/// Pairwise linking numbers with per-component writhe on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// The matrix without its diagonal, for invariance comparisons.
    pub fn off_diagonal(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        let mut out = self.entries.clone();
        for (i, row) in out.iter_mut().enumerate().take(n) {
            row[i] = 0;
        }
        out
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Assembles lk over all pairs, with writhe on the diagonal.
pub fn linking_matrix(d: &LinkDiagram) -> LinkingMatrix {
    let n = d.component_count();
    let mut entries = vec![vec![0i64; n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = if i == j {
                writhe_component(d, i + 1).expect("valid component")
            } else {
                lk(d, i + 1, j + 1).expect("valid component")
            };
        }
    }
    LinkingMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;
    use crate::fixtures;

    #[test]
    fn hopf_powers_have_lk_n() {
        for n in 1..=3 {
            let d = fixtures::hopf_power(n);
            assert_eq!(lk(&d, 1, 2).unwrap(), n as i64);
            assert_eq!(lk(&d, 2, 1).unwrap(), n as i64);
            assert_eq!(lk_symmetrized(&d, 1, 2).unwrap(), n as i64);
        }
    }

    #[test]
    fn borromean_pairs_are_unlinked() {
        let d = fixtures::borromean();
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    assert_eq!(lk(&d, i, j).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn whitehead_has_symmetrized_lk_zero() {
        let d = fixtures::whitehead();
        assert_eq!(lk_symmetrized(&d, 1, 2).unwrap(), 0);
        assert_eq!(lk(&d, 1, 2).unwrap(), 0);
    }

    #[test]
    fn crossingless_unlink_has_everything_zero() {
        let d = fixtures::unlink(2);
        assert_eq!(lk_symmetrized(&d, 1, 2).unwrap(), 0);
        assert_eq!(linking_matrix(&d).rows(), &[vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn lk_rejects_equal_components() {
        let d = fixtures::hopf();
        assert!(matches!(lk(&d, 1, 1), Err(DiagramError::EqualComponents)));
    }

    #[test]
    fn writhe_counts_self_crossings() {
        let d = fixtures::hopf();
        assert_eq!(writhe_component(&d, 1).unwrap(), 0);
        assert_eq!(writhe_component(&d, 2).unwrap(), 0);
        let trefoil = fixtures::trefoil();
        assert_eq!(writhe_component(&trefoil, 1).unwrap(), 3);
    }

    #[test]
    fn linking_matrix_of_sigma1_to_the_fourth() {
        let d = parse_braid("1 1 1 1", 2);
        let m = linking_matrix(&d.unwrap());
        assert_eq!(m.entry(1, 2), 2);
        assert_eq!(m.entry(2, 1), 2);
    }

    #[test]
    fn whitehead_clasp_keeps_writhe_one() {
        // the clasp is a single self-crossing on component 1
        let d = fixtures::whitehead();
        let w1 = writhe_component(&d, 1).unwrap();
        let w2 = writhe_component(&d, 2).unwrap();
        assert_eq!((w1, w2), (1, 0));
    }
}
