use num_traits::Zero;
use serde::Serialize;

use super::theta::{abelianization_maps, theta_with_multiplier};
use super::Extension;
use crate::algebra::LeibnizAction;
use crate::ratlin::{unit_vector, RatMatrix, Rational, Subspace};
use crate::tensor::{exterior_product, induced_map, multiplier_functorial_map, QuotientPresentation};
use crate::xmod::{CrossedModule, SubPair};
use crate::{Error, Result};

/// Image of the incoming map against the kernel of the outgoing map at one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeRecord {
    pub node: String,
    pub incoming_image: SubPair,
    pub outgoing_kernel: SubPair,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapRecord {
    pub name: String,
    pub top: RatMatrix,
    pub base: RatMatrix,
}

/// Exactness of
/// `(I, b∧p) → M(h,p,σ) → M(n,q,δ) → (a,b,σ) → (h,p,σ)_ab → (n,q,δ)_ab → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub subject: String,
    pub maps: Vec<MapRecord>,
    pub nodes: Vec<NodeRecord>,
    pub end_surjective: bool,
    /// `σ∧id` on generators of `I` is compatible with their linear relations.
    pub first_map_well_defined: bool,
}

impl ExactnessReport {
    /// Exact at every interior node and surjective at the end.
    pub fn is_exact(&self) -> bool {
        self.end_surjective && self.nodes.iter().all(|n| n.exact)
    }

    /// The five-term sequence starting at `M(h,p,σ)`.
    pub fn five_term(&self) -> ExactnessReport {
        ExactnessReport {
            subject: self.subject.clone(),
            maps: self.maps[1..].to_vec(),
            nodes: self.nodes[1..].to_vec(),
            end_surjective: self.end_surjective,
            first_map_well_defined: true,
        }
    }

    pub fn summary(&self) -> ExactnessSummary {
        ExactnessSummary {
            subject: self.subject.clone(),
            exact: self.is_exact(),
            end_surjective: self.end_surjective,
            first_map_well_defined: self.first_map_well_defined,
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeSummary {
                    node: n.node.clone(),
                    image_dims: n.incoming_image.dims(),
                    kernel_dims: n.outgoing_kernel.dims(),
                    exact: n.exact,
                })
                .collect(),
            maps: self
                .maps
                .iter()
                .map(|m| MapSummary {
                    name: m.name.clone(),
                    top_shape: (m.top.rows(), m.top.cols()),
                    base_shape: (m.base.rows(), m.base.cols()),
                    top_rank: m.top.rank(),
                    base_rank: m.base.rank(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessSummary {
    pub subject: String,
    pub exact: bool,
    pub end_surjective: bool,
    pub first_map_well_defined: bool,
    pub nodes: Vec<NodeSummary>,
    pub maps: Vec<MapSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeSummary {
    pub node: String,
    pub image_dims: (usize, usize),
    pub kernel_dims: (usize, usize),
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapSummary {
    pub name: String,
    pub top_shape: (usize, usize),
    pub base_shape: (usize, usize),
    pub top_rank: usize,
    pub base_rank: usize,
}

/// `(I, b∧p, σ∧id)` with the data needed to map it into `M(h, p, σ)`.
struct FirstTerm {
    ideal: Subspace,
    ideal_was_closed: bool,
    bp: QuotientPresentation,
    /// I (RREF coordinates) → b∧p
    sigma_wedge: RatMatrix,
    well_defined: bool,
    /// b∧p → p∧p
    alpha: RatMatrix,
}

fn first_term(e: &Extension, ph: &QuotientPresentation, pp: &QuotientPresentation) -> Result<FirstTerm> {
    let total = e.total();
    let (dh, dp) = total.dims();
    let k = e.kernel();
    let b_ideal = CrossedModule::ideal_inclusion(total.base(), &k.base)?;
    let bp = exterior_product(&b_ideal, &CrossedModule::identity(total.base()))?;
    let b_coords = |v: &[Rational]| k.base.coordinates(v).expect("image of the kernel lies in b");
    let sigma = total.delta();

    let mut gens = Vec::new();
    let mut images = Vec::new();
    for i in 0..dp {
        let pi = unit_vector(dp, i);
        for a in k.top.basis() {
            let sa = b_coords(&sigma.mul_vec(a));
            gens.push(ph.class_mn(&pi, a));
            images.push(bp.class_nm(&pi, &sa));
            gens.push(ph.class_nm(a, &pi));
            images.push(bp.class_mn(&sa, &pi));
        }
    }
    for j in 0..dh {
        let hj = unit_vector(dh, j);
        let sh = sigma.mul_vec(&hj);
        for (t, b) in k.base.basis().iter().enumerate() {
            let bc = unit_vector(k.base.dim(), t);
            gens.push(ph.class_mn(b, &hj));
            images.push(bp.class_mn(&bc, &sh));
            gens.push(ph.class_nm(&hj, b));
            images.push(bp.class_nm(&sh, &bc));
        }
    }
    let g = RatMatrix::from_columns(ph.dim(), &gens);
    let t = RatMatrix::from_columns(bp.dim(), &images);
    let well_defined = g.kernel().is_subspace_of(&t.kernel())?;
    let span = g.image();
    let ideal = ph.algebra().ideal_closure(&span)?;
    let ideal_was_closed = ideal == span;

    // Express each basis vector of I through the generators, then map.
    let mut cols = Vec::with_capacity(ideal.dim());
    if ideal_was_closed {
        let pivots = g.rref().1;
        for v in ideal.basis() {
            let coeffs = solve(&g, &pivots, v)?;
            cols.push(t.mul_vec(&coeffs));
        }
    }
    let sigma_wedge = RatMatrix::from_columns(bp.dim(), &cols);
    let alpha = induced_map(&bp, pp, &k.base.inclusion_matrix(), &RatMatrix::identity(dp))?;
    Ok(FirstTerm {
        ideal,
        ideal_was_closed,
        bp,
        sigma_wedge,
        well_defined,
        alpha,
    })
}

/// A solution `x` of `g x = v` supported on the pivot columns.
fn solve(g: &RatMatrix, pivots: &[usize], v: &[Rational]) -> Result<Vec<Rational>> {
    let y = solve_independent(&g.select_columns(pivots), v)?;
    let mut x = vec![Rational::zero(); g.cols()];
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = y[k].clone();
    }
    Ok(x)
}

/// Unique solution of `b y = v` for `b` with independent columns.
fn solve_independent(b: &RatMatrix, v: &[Rational]) -> Result<Vec<Rational>> {
    let aug = b.hstack(&RatMatrix::from_columns(b.rows(), &[v.to_vec()]));
    let (r, pivots) = aug.rref();
    if pivots.contains(&b.cols()) {
        return Err(Error::Consistency("inconsistent linear system".into()));
    }
    Ok((0..b.cols()).map(|k| r.get(k, b.cols()).clone()).collect())
}

fn node(name: &str, incoming: (&RatMatrix, &RatMatrix), outgoing: (&RatMatrix, &RatMatrix)) -> NodeRecord {
    let incoming_image = SubPair::new(incoming.0.image(), incoming.1.image());
    let outgoing_kernel = SubPair::new(outgoing.0.kernel(), outgoing.1.kernel());
    let exact = incoming_image == outgoing_kernel;
    NodeRecord {
        node: name.to_string(),
        incoming_image,
        outgoing_kernel,
        exact,
    }
}

fn coordinates_matrix(rows: usize, vs: impl Iterator<Item = Vec<Rational>>, within: &Subspace) -> Result<RatMatrix> {
    let cols = vs
        .map(|v| {
            within
                .coordinates(&v)
                .ok_or_else(|| Error::Consistency("map leaves the multiplier".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RatMatrix::from_columns(rows, &cols))
}

pub fn six_term_report(e: &Extension) -> Result<ExactnessReport> {
    e.require_central()?;
    let mm = multiplier_functorial_map(e.proj())?;
    let (m_total, m_quot) = (&mm.source, &mm.target);
    let ph = &m_total.data.qn;
    let pp = &m_total.data.qq;
    let first = first_term(e, ph, pp)?;
    if !first.ideal_was_closed {
        return Err(Error::Consistency("generated span of I is not an ideal".into()));
    }

    let map1_top = coordinates_matrix(
        m_total.kernel.top.dim(),
        first.ideal.basis().iter().cloned(),
        &m_total.kernel.top,
    )?;
    let map1_base = coordinates_matrix(
        m_total.kernel.base.dim(),
        first.alpha.columns().into_iter(),
        &m_total.kernel.base,
    )?;
    let map2 = (mm.map.top_map().matrix().clone(), mm.map.base_map().matrix().clone());
    let theta = theta_with_multiplier(e, m_quot)?;
    let map3 = (theta.top_map().matrix().clone(), theta.base_map().matrix().clone());
    let ab = abelianization_maps(e)?;
    let map4 = ab.kernel_to_total_ab.clone();
    let map5 = ab.total_ab_to_quotient_ab.clone();
    let end_surjective = map5.0.is_surjective() && map5.1.is_surjective();

    let nodes = vec![
        node("M(total)", (&map1_top, &map1_base), (&map2.0, &map2.1)),
        node("M(quotient)", (&map2.0, &map2.1), (&map3.0, &map3.1)),
        node("kernel", (&map3.0, &map3.1), (&map4.0, &map4.1)),
        node("total_ab", (&map4.0, &map4.1), (&map5.0, &map5.1)),
    ];
    let rec = |name: &str, m: (RatMatrix, RatMatrix)| MapRecord {
        name: name.to_string(),
        top: m.0,
        base: m.1,
    };
    Ok(ExactnessReport {
        subject: e.name().to_string(),
        maps: vec![
            rec("(I, b^p) -> M(total)", (map1_top, map1_base)),
            rec("M(total) -> M(quotient)", map2),
            rec("theta*", map3),
            rec("kernel -> total_ab", map4),
            rec("total_ab -> quotient_ab", map5),
        ],
        nodes,
        end_surjective,
        first_map_well_defined: first.well_defined,
    })
}

/// Checks on `σ∧id: I → b∧p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma35Report {
    pub ideal_dims: (usize, usize),
    pub ideal_abelian: bool,
    pub exterior_abelian: bool,
    pub generators_span_ideal: bool,
    pub map_well_defined: bool,
    pub crossed_module_valid: bool,
}

impl Lemma35Report {
    /// `I` and `b∧p` are abelian and `I` is spanned by its generators.
    pub fn abelian(&self) -> bool {
        self.ideal_abelian && self.exterior_abelian && self.generators_span_ideal
    }

    pub fn holds(&self) -> bool {
        self.abelian() && self.map_well_defined && self.crossed_module_valid
    }
}

pub fn lemma35_check(e: &Extension) -> Result<Lemma35Report> {
    e.require_central()?;
    let m = crate::tensor::schur_multiplier(e.total())?;
    let ph = &m.data.qn;
    let first = first_term(e, ph, &m.data.qq)?;
    let (i_alg, _) = ph.algebra().subalgebra(&first.ideal)?;
    let bp = first.bp.algebra().clone();
    let crossed_module_valid = first.ideal_was_closed
        && first.well_defined
        && CrossedModule::new(
            "(I,b^p,s^id)",
            i_alg.clone(),
            bp.clone(),
            first.sigma_wedge.clone(),
            LeibnizAction::trivial(bp.clone(), i_alg.clone()),
        )
        .map(|x| x.check().is_valid())
        .unwrap_or(false);
    Ok(Lemma35Report {
        ideal_dims: (first.ideal.dim(), bp.dim()),
        ideal_abelian: i_alg.is_abelian(),
        exterior_abelian: bp.is_abelian(),
        generators_span_ideal: first.ideal_was_closed,
        map_well_defined: first.well_defined,
        crossed_module_valid,
    })
}
