//! Compatible sequences for reduced words.

use crate::combinat::StrongComposition;

/// All `β` compatible with the word `α`: same length, weakly increasing,
/// `β_i ≤ α_i`, and `β_i < β_{i+1}` whenever `α_i < α_{i+1}`.
pub fn enumerate_compatible(alpha: &StrongComposition) -> Vec<StrongComposition> {
    let a = alpha.entries();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len());
    extend(a, &mut cur, &mut out);
    out
}

fn extend(a: &[u32], cur: &mut Vec<u32>, out: &mut Vec<StrongComposition>) {
    let k = cur.len();
    if k == a.len() {
        out.push(StrongComposition::new_unchecked(cur.clone()));
        return;
    }
    let lo = match k {
        0 => 1,
        _ if a[k - 1] < a[k] => cur[k - 1] + 1,
        _ => cur[k - 1],
    };
    for b in lo..=a[k] {
        cur.push(b);
        extend(a, cur, out);
        cur.pop();
    }
}

/// Independent check of the four compatibility conditions.
pub fn is_compatible(beta: &StrongComposition, alpha: &StrongComposition) -> bool {
    let (b, a) = (beta.entries(), alpha.entries());
    b.len() == a.len()
        && b.iter().all(|&x| x >= 1)
        && b.windows(2).all(|w| w[0] <= w[1])
        && b.iter().zip(a).all(|(x, y)| x <= y)
        && (1..a.len()).all(|i| a[i - 1] >= a[i] || b[i - 1] < b[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> StrongComposition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert!(enumerate_compatible(&sc("(1,2,1)")).is_empty());
        assert_eq!(enumerate_compatible(&sc("(2,1,2)")), vec![sc("(1,1,2)")]);
        assert_eq!(enumerate_compatible(&sc("(1)")), vec![sc("(1)")]);
        assert!(is_compatible(&sc("(1,1,2)"), &sc("(2,1,2)")));
    }
}
