//! Leibniz homology from the Loday complex, compared with the kernel of q^q -> q.

use leibxmod::fixtures;
use leibxmod::homology::{hl, is_complex};
use leibxmod::tensor::exterior_square_data;
use leibxmod::CrossedModule;

fn main() -> leibxmod::Result<()> {
    let algebras = fixtures::algebras().into_iter().chain(fixtures::random_corpus(6, 11));
    for q in algebras {
        let data = exterior_square_data(&CrossedModule::identity(&q))?;
        let hls: Vec<usize> = (1..=3).map(|n| hl(&q, n)).collect::<leibxmod::Result<_>>()?;
        println!(
            "{:<8} HL1..3 = {hls:?}  dim ker(q^q -> q) = {}  d∘d = 0: {}",
            q.name(),
            data.mu_q.kernel().dim(),
            is_complex(&q)
        );
    }
    Ok(())
}
