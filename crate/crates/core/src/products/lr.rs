//! Littlewood–Richardson coefficients by Yamanouchi skew tableaux.

use crate::combinat::enumerate::partitions;
use crate::combinat::{FormalSum, Partition, WeakComposition};
use crate::tableaux::enumerate_ssyt_with_content;

/// Number of Yamanouchi semistandard tableaux of shape `ν/λ` and content
/// `μ`; zero unless `λ ⊆ ν` and `|λ| + |μ| = |ν|`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    let content = WeakComposition::new(mu.entries().to_vec());
    enumerate_ssyt_with_content(nu, lambda, &content)
        .iter()
        .filter(|t| t.is_yamanouchi())
        .count() as u64
}

/// `Σ_ν c_{λμ}^ν ν`.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> FormalSum<Partition> {
    let mut out = FormalSum::new();
    for nu in partitions((lambda.size() + mu.size()) as u32) {
        let c = lr_coefficient(lambda, mu, &nu);
        out.add_term(nu, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn trivial_cases() {
        let l = p(&[3, 1]);
        assert_eq!(lr_coefficient(&l, &Partition::empty(), &l), 1);
        assert_eq!(lr_coefficient(&l, &p(&[1]), &p(&[2, 2, 1])), 0);
        assert_eq!(lr_product(&p(&[1]), &p(&[1])).to_string(), "1*(1,1) + 1*(2)");
    }
}
