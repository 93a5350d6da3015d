//! Leibniz homology through the Loday complex `q^{⊗n}`, `n ≤ 4`.

use num_traits::{One, Zero};

use crate::algebra::LeibnizAlgebra;
use crate::ratlin::{RatMatrix, Rational};
use crate::{Error, Result};

pub const MAX_BOUNDARY_DEGREE: usize = 4;
pub const MAX_HOMOLOGY_DEGREE: usize = 3;

/// One boundary map of the Loday complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LodayComplexSlice {
    pub algebra: LeibnizAlgebra,
    pub degree: usize,
    pub boundary: RatMatrix,
}

fn decode(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

fn encode(word: &[usize], d: usize) -> usize {
    word.iter().fold(0, |acc, &x| acc * d + x)
}

/// `d(x₁⊗…⊗xₙ) = Σ_{i<j} (−1)^j x₁⊗…⊗[xᵢ,xⱼ]⊗…x̂ⱼ…⊗xₙ`
pub fn boundary(q: &LeibnizAlgebra, n: usize) -> Result<RatMatrix> {
    if !(1..=MAX_BOUNDARY_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            min: 1,
            max: MAX_BOUNDARY_DEGREE,
        });
    }
    let d = q.dim();
    let (rows, cols) = (d.pow(n as u32 - 1), d.pow(n as u32));
    let mut m = RatMatrix::zeros(rows, cols);
    if n == 1 {
        return Ok(m);
    }
    for col in 0..cols {
        let w = decode(col, d, n);
        for j in 1..n {
            let sign = if (j + 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
            for i in 0..j {
                let br = q.bracket_basis(w[i], w[j]);
                for (k, c) in br.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut out: Vec<usize> = Vec::with_capacity(n - 1);
                    for (p, &x) in w.iter().enumerate() {
                        if p == i {
                            out.push(k);
                        } else if p != j {
                            out.push(x);
                        }
                    }
                    let r = encode(&out, d);
                    let v = m.get(r, col) + &sign * c;
                    m.set(r, col, v);
                }
            }
        }
    }
    Ok(m)
}

pub fn slice(q: &LeibnizAlgebra, n: usize) -> Result<LodayComplexSlice> {
    Ok(LodayComplexSlice {
        algebra: q.clone(),
        degree: n,
        boundary: boundary(q, n)?,
    })
}

/// `dim HLₙ(q) = dim ker dₙ − rank dₙ₊₁`
pub fn hl(q: &LeibnizAlgebra, n: usize) -> Result<usize> {
    if !(1..=MAX_HOMOLOGY_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            min: 1,
            max: MAX_HOMOLOGY_DEGREE,
        });
    }
    let dn = boundary(q, n)?;
    let next = boundary(q, n + 1)?;
    Ok(dn.cols() - dn.rank() - next.rank())
}

/// `dₙ₋₁ ∘ dₙ = 0` for `2 ≤ n ≤ 4`.
pub fn is_complex(q: &LeibnizAlgebra) -> bool {
    (2..=MAX_BOUNDARY_DEGREE).all(|n| {
        let a = boundary(q, n - 1).expect("degree in range");
        let b = boundary(q, n).expect("degree in range");
        a.mul(&b).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ratlin::{unit_vector, Subspace};
    use crate::tensor::exterior_square_data;
    use crate::xmod::CrossedModule;
    use proptest::prelude::*;

    #[test]
    fn abelian_boundaries_vanish() {
        let a = fixtures::abelian(2);
        for n in 1..=4 {
            assert!(boundary(&a, n).unwrap().is_zero());
        }
        assert_eq!(hl(&a, 2).unwrap(), 4);
    }

    #[test]
    fn n2_boundaries() {
        let q = fixtures::n2();
        let d2 = boundary(&q, 2).unwrap();
        assert_eq!(d2.rank(), 1);
        assert_eq!(d2.mul_vec(&unit_vector(4, 0)), unit_vector(2, 1));
        let d3 = boundary(&q, 3).unwrap();
        assert_eq!(d3.rank(), 2);
        assert_eq!(d3.image(), Subspace::span(4, [unit_vector(4, 1), unit_vector(4, 3)]));
        assert_eq!(hl(&q, 2).unwrap(), 1);
    }

    #[test]
    fn sl2_has_no_second_homology() {
        let q = fixtures::sl2();
        assert_eq!(boundary(&q, 3).unwrap().rows(), 9);
        assert_eq!(hl(&q, 2).unwrap(), 0);
    }

    #[test]
    fn degree_limits() {
        let q = fixtures::k();
        assert!(matches!(boundary(&q, 5), Err(Error::DegreeOutOfRange { .. })));
        assert!(matches!(hl(&q, 4), Err(Error::DegreeOutOfRange { .. })));
        assert!(boundary(&q, 0).is_err());
    }

    #[test]
    fn fixtures_form_complexes_and_match_exterior_kernels() {
        for q in fixtures::algebras() {
            assert!(is_complex(&q), "{}", q.name());
            let data = exterior_square_data(&CrossedModule::identity(&q)).unwrap();
            assert_eq!(hl(&q, 2).unwrap(), data.mu_q.kernel().dim(), "{}", q.name());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn random_algebras_match_exterior_kernels(d in 1usize..4, seed in any::<u64>()) {
            let q = fixtures::random_leibniz(d, seed);
            prop_assert!(is_complex(&q));
            let data = exterior_square_data(&CrossedModule::identity(&q)).unwrap();
            prop_assert_eq!(hl(&q, 2).unwrap(), data.mu_q.kernel().dim());
        }
    }
}
