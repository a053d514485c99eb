//! Run decompositions of words.

use crate::combinat::StrongComposition;

/// Splits `word` into maximal weakly increasing runs.
pub fn runs<T: Ord + Clone>(word: &[T]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::new();
    for letter in word {
        match out.last_mut() {
            Some(run) if run.last().is_some_and(|l| l <= letter) => run.push(letter.clone()),
            _ => out.push(vec![letter.clone()]),
        }
    }
    out
}

/// Lengths of the maximal weakly increasing runs.
pub fn descent_composition<T: Ord + Clone>(word: &[T]) -> StrongComposition {
    StrongComposition::new_unchecked(runs(word).iter().map(|r| r.len() as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_examples() {
        assert_eq!(runs(&[4, 1, 2, 2, 1]), vec![vec![4], vec![1, 2, 2], vec![1]]);
        assert_eq!(descent_composition(&[4, 1, 2, 2, 1]).entries(), &[1, 3, 1]);
        assert_eq!(descent_composition(&[4, 2, 2, 1, 1]).entries(), &[1, 2, 2]);
        assert_eq!(descent_composition(&[1, 2, 3]).entries(), &[3]);
        assert_eq!(runs(&[5, 1, 8, 2, 1]), vec![vec![5], vec![1, 8], vec![2], vec![1]]);
        assert!(descent_composition::<u32>(&[]).is_empty());
    }
}
