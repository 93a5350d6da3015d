use num_traits::Zero;
use serde::Serialize;

use super::{is_multiplier_shaped, Extension};
use crate::ratlin::{axpy, zero_vector, QuotientMap, RatMatrix, Rational, Subspace};
use crate::tensor::{multiplier_functorial_map, schur_multiplier, SchurMultiplier};
use crate::xmod::XModHom;
use crate::{Error, Result};

/// How a linear section of a surjection is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SectionPolicy {
    /// Leftmost pivot columns.
    FirstPivots,
    /// Rightmost pivot columns.
    LastPivots,
    /// `FirstPivots` shifted by a kernel vector in every column.
    Shifted,
}

/// A right inverse `s` of a surjective matrix `f` (`f s = id`).
pub fn section(f: &RatMatrix, policy: SectionPolicy) -> Result<RatMatrix> {
    let (r, c) = (f.rows(), f.cols());
    if f.rank() != r {
        return Err(Error::NotSurjective {
            what: "linear map".into(),
        });
    }
    let pivots: Vec<usize> = match policy {
        SectionPolicy::FirstPivots | SectionPolicy::Shifted => f.rref().1,
        SectionPolicy::LastPivots => {
            let rev: Vec<usize> = (0..c).rev().collect();
            let mut p: Vec<usize> = f.select_columns(&rev).rref().1.iter().map(|&k| c - 1 - k).collect();
            p.sort_unstable();
            p
        }
    };
    let b_inv = f
        .select_columns(&pivots)
        .inverse()
        .ok_or_else(|| Error::Consistency("pivot block is singular".into()))?;
    let mut s = RatMatrix::zeros(c, r);
    for (k, &p) in pivots.iter().enumerate() {
        for j in 0..r {
            s.set(p, j, b_inv.get(k, j).clone());
        }
    }
    if policy == SectionPolicy::Shifted {
        if let Some(k) = f.kernel().basis().first() {
            let cols: Vec<Vec<Rational>> = s
                .columns()
                .into_iter()
                .map(|mut col| {
                    axpy(&mut col, &Rational::from_integer(1.into()), k);
                    col
                })
                .collect();
            s = RatMatrix::from_columns(c, &cols);
        }
    }
    Ok(s)
}

/// `θ*(e): M(n, q, δ) → (a, b, σ)` with the default sections, checked
/// against two other section choices.
pub fn theta_star(e: &Extension) -> Result<XModHom> {
    let m = schur_multiplier(e.quotient())?;
    theta_with_multiplier(e, &m)
}

pub(crate) fn theta_with_multiplier(e: &Extension, m: &SchurMultiplier) -> Result<XModHom> {
    let first = theta_star_with(e, m, SectionPolicy::FirstPivots)?;
    for policy in [SectionPolicy::LastPivots, SectionPolicy::Shifted] {
        let other = theta_star_with(e, m, policy)?;
        if other != first {
            return Err(Error::Consistency(format!(
                "theta* of {} depends on the section ({policy:?})",
                e.name()
            )));
        }
    }
    Ok(first)
}

/// Connecting map evaluated on section lifts:
/// `q∗n ↦ ^{s₂q} s₁n`, `n∗q ↦ (s₁n)^{s₂q}`, `q∗q' ↦ [s₂q, s₂q']`.
pub fn theta_star_with(e: &Extension, m: &SchurMultiplier, policy: SectionPolicy) -> Result<XModHom> {
    e.require_central()?;
    let total = e.total();
    let s1 = section(e.proj().top_map().matrix(), policy)?.columns();
    let s2 = section(e.proj().base_map().matrix(), policy)?.columns();
    let (dh, dp) = total.dims();

    let qn = &m.data.qn;
    let st = qn.symbols();
    let mut top_cols = Vec::new();
    for x in m.kernel.top.basis() {
        let lift = qn.lift(x);
        let mut out = zero_vector(dh);
        for (idx, c) in lift.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = match st.decode(idx) {
                (true, i, j) => total.action().left_act(&s2[i], &s1[j]),
                (false, i, j) => total.action().right_act(&s1[j], &s2[i]),
            };
            axpy(&mut out, c, &v);
        }
        top_cols.push(kernel_coordinates(&e.kernel().top, &out, e.name())?);
    }
    let qq = &m.data.qq;
    let sb = qq.symbols();
    let mut base_cols = Vec::new();
    for x in m.kernel.base.basis() {
        let lift = qq.lift(x);
        let mut out = zero_vector(dp);
        for (idx, c) in lift.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = match sb.decode(idx) {
                (true, i, j) => total.base().bracket(&s2[i], &s2[j]),
                (false, i, j) => total.base().bracket(&s2[j], &s2[i]),
            };
            axpy(&mut out, c, &v);
        }
        base_cols.push(kernel_coordinates(&e.kernel().base, &out, e.name())?);
    }
    let (k, _) = e.kernel_xmod()?;
    let top = RatMatrix::from_columns(k.top().dim(), &top_cols);
    let base = RatMatrix::from_columns(k.base().dim(), &base_cols);
    let theta = XModHom::from_matrices(m.multiplier.clone(), k, top, base)?;
    theta.check().into_result("theta*")?;
    Ok(theta)
}

fn kernel_coordinates(kernel: &Subspace, v: &[Rational], name: &str) -> Result<Vec<Rational>> {
    kernel
        .coordinates(v)
        .ok_or_else(|| Error::Consistency(format!("theta* of {name} leaves the kernel")))
}

/// Equivalent stem and cover conditions, each evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop41Report {
    /// Kernel inside the derived crossed module.
    pub stem: bool,
    pub theta_surjective: bool,
    /// `(a, b, σ) → (h, p, σ)_ab` is zero.
    pub kernel_to_abelianization_zero: bool,
    /// `(h, p, σ)_ab → (n, q, δ)_ab` is an isomorphism.
    pub abelianizations_isomorphic: bool,
    pub cover: bool,
    pub theta_bijective: bool,
    /// `M(h, p, σ) → M(n, q, δ)` is zero.
    pub multiplier_map_zero: bool,
}

impl Prop41Report {
    /// The four stem conditions agree.
    pub fn part_i_agrees(&self) -> bool {
        let v = [
            self.stem,
            self.theta_surjective,
            self.kernel_to_abelianization_zero,
            self.abelianizations_isomorphic,
        ];
        v.iter().all(|&x| x == v[0])
    }

    /// Cover, bijective θ*, and isomorphic abelianizations with a zero multiplier map agree.
    pub fn part_ii_agrees(&self) -> bool {
        let alt = self.abelianizations_isomorphic && self.multiplier_map_zero;
        self.cover == self.theta_bijective && self.cover == alt
    }

    pub fn agrees(&self) -> bool {
        self.part_i_agrees() && self.part_ii_agrees()
    }
}

pub fn prop41_crosscheck(e: &Extension) -> Result<Prop41Report> {
    e.require_central()?;
    let mm = multiplier_functorial_map(e.proj())?;
    let theta = theta_with_multiplier(e, &mm.target)?;
    let stem = e.kernel().is_within(&e.total().derived())?;
    let maps = abelianization_maps(e)?;
    let k_to_ab = maps.kernel_to_total_ab;
    let ab_map = maps.total_ab_to_quotient_ab;
    let abelianizations_isomorphic = ab_map.0.is_injective()
        && ab_map.0.is_surjective()
        && ab_map.1.is_injective()
        && ab_map.1.is_surjective();
    let cover = stem && is_multiplier_shaped(e, &mm.target)?;
    Ok(Prop41Report {
        stem,
        theta_surjective: theta.is_surjective(),
        kernel_to_abelianization_zero: k_to_ab.0.is_zero() && k_to_ab.1.is_zero(),
        abelianizations_isomorphic,
        cover,
        theta_bijective: theta.is_surjective() && theta.is_injective(),
        multiplier_map_zero: mm.map.top_map().matrix().is_zero() && mm.map.base_map().matrix().is_zero(),
    })
}

pub(crate) struct AbelianizationMaps {
    /// Kernel (RREF coordinates) to `total_ab`, top and base.
    pub kernel_to_total_ab: (RatMatrix, RatMatrix),
    pub total_ab_to_quotient_ab: (RatMatrix, RatMatrix),
}

pub(crate) fn abelianization_maps(e: &Extension) -> Result<AbelianizationMaps> {
    let (_, pt) = e.total().abelianization()?;
    let (_, pq) = e.quotient().abelianization()?;
    let k = e.kernel();
    let kernel_to_total_ab = (
        pt.top_map().matrix().mul(&k.top.inclusion_matrix()),
        pt.base_map().matrix().mul(&k.base.inclusion_matrix()),
    );
    let dt = e.total().derived();
    let st = QuotientMap::new(dt.top).section().clone();
    let sb = QuotientMap::new(dt.base).section().clone();
    let total_ab_to_quotient_ab = (
        pq.top_map().matrix().mul(e.proj().top_map().matrix()).mul(&st),
        pq.base_map().matrix().mul(e.proj().base_map().matrix()).mul(&sb),
    );
    Ok(AbelianizationMaps {
        kernel_to_total_ab,
        total_ab_to_quotient_ab,
    })
}
