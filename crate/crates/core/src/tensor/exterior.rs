use super::{exterior_product, induced_map, QuotientPresentation};
use crate::algebra::{AlgebraHom, LeibnizAction};
use crate::ratlin::{axpy, unit_vector, zero_vector, RatMatrix, Rational};
use crate::xmod::{CrossedModule, XModHom};
use crate::{Error, Result};

/// The crossed module `(q∧n, q∧q, id∧δ)` together with `φ = (λ̄, μ̄)` onto `(n, q, δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorSquareData {
    pub xm: CrossedModule,
    pub qn: QuotientPresentation,
    pub qq: QuotientPresentation,
    pub id_wedge_delta: AlgebraHom,
    pub action: LeibnizAction,
    pub lambda_n: AlgebraHom,
    pub mu_q: AlgebraHom,
    pub crossed: CrossedModule,
    pub phi: XModHom,
}

pub fn exterior_square_data(xm: &CrossedModule) -> Result<ExteriorSquareData> {
    xm.check().into_result("crossed module")?;
    let q = xm.base();
    let n = xm.top();
    let id_q = CrossedModule::identity(q);
    let qn = exterior_product(&id_q, xm)?;
    let qq = exterior_product(&id_q, &id_q)?;
    let (dq, dn) = (q.dim(), n.dim());

    let id_delta = induced_map(&qn, &qq, &RatMatrix::identity(dq), xm.delta())?;

    let s = qn.symbols();
    let lambda_cols: Vec<Vec<Rational>> = (0..s.dim())
        .map(|idx| match s.decode(idx) {
            (true, i, j) => xm.action().left_basis(i, j).to_vec(),
            (false, i, j) => xm.action().right_basis(j, i).to_vec(),
        })
        .collect();
    let lambda = qn.descend_to(&RatMatrix::from_columns(dn, &lambda_cols), "lambda")?;

    let t = qq.symbols();
    let mu_cols: Vec<Vec<Rational>> = (0..t.dim())
        .map(|idx| match t.decode(idx) {
            (true, i, j) => q.bracket_basis(i, j).to_vec(),
            (false, i, j) => q.bracket_basis(j, i).to_vec(),
        })
        .collect();
    let mu = qq.descend_to(&RatMatrix::from_columns(dq, &mu_cols), "mu")?;

    let one = Rational::from_integer(1.into());
    let neg = -one.clone();
    let eq: Vec<_> = (0..dq).map(|i| unit_vector(dq, i)).collect();
    let en: Vec<_> = (0..dn).map(|j| unit_vector(dn, j)).collect();
    let mut left_q = Vec::with_capacity(dq);
    let mut right_q = Vec::with_capacity(dq);
    for a in 0..dq {
        let mut lcols = Vec::with_capacity(s.dim());
        let mut rcols = Vec::with_capacity(s.dim());
        for idx in 0..s.dim() {
            let (is_mn, i, j) = s.decode(idx);
            let aq = xm.action().left_basis(a, j);
            let qa = xm.action().right_basis(j, a);
            let mut l = zero_vector(s.dim());
            let mut r = zero_vector(s.dim());
            if is_mn {
                s.add_mn(&mut l, &one, q.bracket_basis(a, i), &en[j]);
                s.add_nm(&mut l, &neg, aq, &eq[i]);
                s.add_mn(&mut r, &one, q.bracket_basis(i, a), &en[j]);
                s.add_mn(&mut r, &one, &eq[i], qa);
            } else {
                s.add_nm(&mut l, &one, aq, &eq[i]);
                s.add_mn(&mut l, &neg, q.bracket_basis(a, i), &en[j]);
                s.add_nm(&mut r, &one, qa, &eq[i]);
                s.add_nm(&mut r, &one, &en[j], q.bracket_basis(i, a));
            }
            lcols.push(l);
            rcols.push(r);
        }
        left_q.push(qn.descend_endo(&RatMatrix::from_columns(s.dim(), &lcols), "q-action on q^n")?);
        right_q.push(qn.descend_endo(&RatMatrix::from_columns(s.dim(), &rcols), "q-action on q^n")?);
    }

    let qn_alg = qn.algebra().clone();
    let qq_alg = qq.algebra().clone();
    let dqn = qn_alg.dim();
    let via_mu = |mats: &[RatMatrix], u: usize, y: usize| -> Vec<Rational> {
        let mut out = zero_vector(dqn);
        for (a, c) in mu.column(u).iter().enumerate() {
            axpy(&mut out, c, &mats[a].column(y));
        }
        out
    };
    let action = LeibnizAction::from_fn(
        qq_alg.clone(),
        qn_alg.clone(),
        |u, y| via_mu(&left_q, u, y),
        |y, u| via_mu(&right_q, u, y),
    )?;

    let crossed = CrossedModule::new(
        format!("({}^{},{}^{},id^d)", q.name(), n.name(), q.name(), q.name()),
        qn_alg.clone(),
        qq_alg.clone(),
        id_delta.clone(),
        action.clone(),
    )?;
    crossed.check().into_result("exterior crossed module")?;
    let phi = XModHom::from_matrices(crossed.clone(), xm.clone(), lambda.clone(), mu.clone())?;
    phi.check().into_result("exterior projection")?;
    if !phi.kernel().is_within(&crossed.center())? {
        return Err(Error::Consistency(format!(
            "kernel of the exterior projection onto {} is not central",
            xm.name()
        )));
    }
    Ok(ExteriorSquareData {
        xm: xm.clone(),
        id_wedge_delta: AlgebraHom::new(qn_alg.clone(), qq_alg.clone(), id_delta)?,
        lambda_n: AlgebraHom::new(qn_alg, n.clone(), lambda)?,
        mu_q: AlgebraHom::new(qq_alg, q.clone(), mu)?,
        qn,
        qq,
        action,
        crossed,
        phi,
    })
}
