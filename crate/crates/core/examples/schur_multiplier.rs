//! Schur multipliers as kernels of the exterior square onto the crossed module.

use leibxmod::fixtures;
use leibxmod::tensor::schur_multiplier;

fn main() -> leibxmod::Result<()> {
    for xm in fixtures::crossed_modules() {
        let m = schur_multiplier(&xm)?;
        let (t, b, r) = m.triple();
        println!(
            "{:<24} q^n {} q^q {}  M = ({t}, {b}), rank {r}",
            xm.name(),
            m.data.qn.dim(),
            m.data.qq.dim()
        );
    }
    Ok(())
}
