//! Braid words and their closures.
//!
//! A word is whitespace- or comma-separated signed integers: `1 1` is two
//! positive crossings of strands 1 and 2, `-2` crosses strands 2 and 3 with
//! the higher strand on top. The closure joins the bottom of each strand
//! position to its top. Components are numbered by the lowest strand
//! position they pass through.

use super::{Builder, LinkDiagram};
use crate::error::BraidError;

pub(crate) fn parse_word(text: &str) -> Result<Vec<i32>, BraidError> {
    let mut word = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let letter: i32 = tok.parse().map_err(|_| BraidError::BadLetter(tok.to_string()))?;
        if letter == 0 {
            return Err(BraidError::BadLetter(tok.to_string()));
        }
        word.push(letter);
    }
    Ok(word)
}

/// The permutation of strand positions induced by a braid word, as the map
/// `start position -> end position` (0-based).
pub fn braid_permutation(word: &[i32], strands: usize) -> Vec<usize> {
    let mut at: Vec<usize> = (0..strands).collect(); // at[pos] = strand occupying pos
    for &letter in word {
        let g = letter.unsigned_abs() as usize;
        at.swap(g - 1, g);
    }
    let mut end = vec![0; strands];
    for (pos, &strand) in at.iter().enumerate() {
        end[strand] = pos;
    }
    end
}

/// Parses a braid word and returns the closure of the braid.
pub fn parse_braid(text: &str, strands: usize) -> Result<LinkDiagram, BraidError> {
    if strands == 0 {
        return Err(BraidError::NoStrands);
    }
    let word = parse_word(text)?;
    for &letter in &word {
        let g = letter.unsigned_abs() as usize;
        if g + 1 > strands {
            return Err(BraidError::GeneratorOutOfRange { letter, strands });
        }
    }

    let mut b = Builder::new();
    let initial: Vec<_> = (0..strands).map(|_| b.new_loop(1)).collect();
    let mut positions = initial.clone();
    b.weave(&mut positions, &word);

    // Closure: the strand leaving the bottom of position p continues into
    // the arc that entered at the top of position p.
    for p in 0..strands {
        b.set_next(positions[p], initial[p]);
    }

    // Components, ordered by lowest strand position in each closure cycle.
    let perm = braid_permutation(&word, strands);
    let mut component_of_position = vec![0usize; strands];
    let mut count = 0;
    for start in 0..strands {
        if component_of_position[start] != 0 {
            continue;
        }
        count += 1;
        let mut pos = start;
        loop {
            component_of_position[pos] = count;
            pos = perm[pos];
            if pos == start {
                break;
            }
        }
    }
    for p in 0..strands {
        let comp = component_of_position[p];
        let mut arc = initial[p];
        loop {
            b.set_component(arc, comp);
            let next = b.arc(arc).next;
            if next == initial[p] {
                break;
            }
            arc = next;
        }
    }

    Ok(b.finish(count)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_positive_crossings_close_to_two_components() {
        let d = parse_braid("1 1", 2).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.crossing_count(), 2);
        assert!(d.crossings().iter().all(|c| c.sign == 1));
    }

    #[test]
    fn borromean_word_closes_to_three_components() {
        let d = parse_braid("1 -2 1 -2 1 -2", 3).unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.crossing_count(), 6);
        assert_eq!(d.arc_count(), 12);
    }

    #[test]
    fn single_crossing_closes_to_one_component() {
        let d = parse_braid("1", 2).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 1);
    }

    #[test]
    fn empty_word_gives_unlink() {
        let d = parse_braid("", 3).unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.arc_count(), 3);
    }

    #[test]
    fn zero_strands_is_an_error() {
        assert!(matches!(parse_braid("", 0), Err(BraidError::NoStrands)));
    }

    #[test]
    fn generator_out_of_range() {
        assert!(matches!(parse_braid("2", 2), Err(BraidError::GeneratorOutOfRange { .. })));
    }

    #[test]
    fn commas_are_separators_too() {
        let d = parse_braid("1,-2, 1 -2,1,-2", 3).unwrap();
        assert_eq!(d.component_count(), 3);
    }

    #[test]
    fn component_count_matches_permutation_cycles() {
        for (word, strands) in [("1 1", 2), ("1 -2 1 -2 1 -2", 3), ("1", 2), ("1 2 1", 3), ("2 2 1", 3)] {
            let letters = parse_word(word).unwrap();
            let perm = braid_permutation(&letters, strands);
            let mut seen = vec![false; strands];
            let mut cycles = 0;
            for s in 0..strands {
                if seen[s] {
                    continue;
                }
                cycles += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
            assert_eq!(parse_braid(word, strands).unwrap().component_count(), cycles, "word {word}");
        }
    }
}
