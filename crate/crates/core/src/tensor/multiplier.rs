use num_traits::Zero;

use super::{exterior_square_data, induced_map, ExteriorSquareData, QuotientPresentation};
use crate::ratlin::{RatMatrix, Rational, Subspace};
use crate::xmod::{CrossedModule, SubPair, XModHom};
use crate::{Error, Result};

/// `M(n, q, δ) = Ker((q∧n, q∧q, id∧δ) → (n, q, δ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurMultiplier {
    pub data: ExteriorSquareData,
    pub kernel: SubPair,
    pub multiplier: CrossedModule,
    pub inclusion: XModHom,
}

impl SchurMultiplier {
    /// `(dim top, dim base, rank of the connecting map)`, a complete invariant
    /// for abelian crossed modules with trivial action.
    pub fn triple(&self) -> (usize, usize, usize) {
        abelian_triple(&self.multiplier)
    }

    pub fn dims(&self) -> (usize, usize) {
        self.multiplier.dims()
    }

    pub fn is_zero(&self) -> bool {
        self.kernel.is_zero()
    }
}

pub(crate) fn abelian_triple(xm: &CrossedModule) -> (usize, usize, usize) {
    let (t, b) = xm.dims();
    (t, b, xm.delta().rank())
}

pub fn schur_multiplier(xm: &CrossedModule) -> Result<SchurMultiplier> {
    let data = exterior_square_data(xm)?;
    let kernel = data.phi.kernel();
    let (multiplier, inclusion) = data.crossed.restrict(&kernel)?;
    let multiplier = multiplier.with_name(format!("M{}", xm.name()));
    let p = multiplier.predicates();
    if !(p.is_abelian_by_components && p.is_abelian) {
        return Err(Error::Consistency(format!(
            "multiplier of {} is not abelian with trivial action",
            xm.name()
        )));
    }
    Ok(SchurMultiplier {
        data,
        kernel,
        multiplier,
        inclusion,
    })
}

/// `(φ₂∧φ₁, φ₂∧φ₂)` induced by a surjection `(φ₁, φ₂): (h, p, σ) → (n, q, δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedExteriorHom {
    pub source: ExteriorSquareData,
    pub target: ExteriorSquareData,
    pub map: XModHom,
    /// Kernel of the top map equals the ideal generated by `p∗a, a∗p, b∗h, h∗b`.
    pub top_kernel_matches: bool,
    /// Kernel of the base map equals the ideal generated by `p∗b, b∗p`.
    pub base_kernel_matches: bool,
}

pub fn induced_exterior_hom(f: &XModHom) -> Result<InducedExteriorHom> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective {
            what: format!("{} -> {}", f.source().name(), f.target().name()),
        });
    }
    let source = exterior_square_data(f.source())?;
    let target = exterior_square_data(f.target())?;
    induced_between(f, source, target)
}

pub(crate) fn induced_between(
    f: &XModHom,
    source: ExteriorSquareData,
    target: ExteriorSquareData,
) -> Result<InducedExteriorHom> {
    let phi1 = f.top_map().matrix();
    let phi2 = f.base_map().matrix();
    let top = induced_map(&source.qn, &target.qn, phi2, phi1)?;
    let base = induced_map(&source.qq, &target.qq, phi2, phi2)?;
    let map = XModHom::from_matrices(source.crossed.clone(), target.crossed.clone(), top, base)?;
    map.check().into_result("induced exterior map")?;
    if !map.is_surjective() {
        return Err(Error::Consistency("induced exterior map is not surjective".into()));
    }
    let ker = f.kernel();
    let (a, b) = (ker.top.basis(), ker.base.basis());
    let (dp, dh) = (f.source().base().dim(), f.source().top().dim());
    let units = |d: usize| (0..d).map(move |i| crate::ratlin::unit_vector(d, i));

    let qn = &source.qn;
    let mut gens = Vec::new();
    for pi in units(dp) {
        for x in a {
            gens.push(qn.class_mn(&pi, x));
            gens.push(qn.class_nm(x, &pi));
        }
    }
    for hj in units(dh) {
        for y in b {
            gens.push(qn.class_mn(y, &hj));
            gens.push(qn.class_nm(&hj, y));
        }
    }
    let top_ideal = generated_ideal(qn, gens)?;
    let qq = &source.qq;
    let mut gens = Vec::new();
    for pi in units(dp) {
        for y in b {
            gens.push(qq.class_mn(&pi, y));
            gens.push(qq.class_nm(y, &pi));
        }
    }
    let base_ideal = generated_ideal(qq, gens)?;
    let k = map.kernel();
    Ok(InducedExteriorHom {
        top_kernel_matches: k.top == top_ideal,
        base_kernel_matches: k.base == base_ideal,
        source,
        target,
        map,
    })
}

pub(crate) fn generated_ideal(pres: &QuotientPresentation, gens: Vec<Vec<Rational>>) -> Result<Subspace> {
    let d = pres.dim();
    let seed = Subspace::span(d, gens.into_iter().filter(|v| !v.iter().all(Zero::is_zero)));
    pres.algebra().ideal_closure(&seed)
}

/// `M(f): M(source) → M(target)` for a surjection `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierMap {
    pub source: SchurMultiplier,
    pub target: SchurMultiplier,
    pub map: XModHom,
}

pub fn multiplier_functorial_map(f: &XModHom) -> Result<MultiplierMap> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective {
            what: format!("{} -> {}", f.source().name(), f.target().name()),
        });
    }
    let source = schur_multiplier(f.source())?;
    let target = schur_multiplier(f.target())?;
    let induced = induced_between(f, source.data.clone(), target.data.clone())?;
    let map = restrict_between(&induced.map, &source, &target)?;
    Ok(MultiplierMap { source, target, map })
}

/// Restriction of `g` to the multipliers, in their kernel bases.
pub(crate) fn restrict_between(g: &XModHom, source: &SchurMultiplier, target: &SchurMultiplier) -> Result<XModHom> {
    let restrict = |m: &RatMatrix, from: &Subspace, to: &Subspace| -> Result<RatMatrix> {
        let cols = from
            .basis()
            .iter()
            .map(|v| {
                to.coordinates(&m.mul_vec(v))
                    .ok_or_else(|| Error::Consistency("induced map leaves the multiplier".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RatMatrix::from_columns(to.dim(), &cols))
    };
    let top = restrict(g.top_map().matrix(), &source.kernel.top, &target.kernel.top)?;
    let base = restrict(g.base_map().matrix(), &source.kernel.base, &target.kernel.base)?;
    let map = XModHom::from_matrices(source.multiplier.clone(), target.multiplier.clone(), top, base)?;
    map.check().into_result("multiplier map")?;
    Ok(map)
}
