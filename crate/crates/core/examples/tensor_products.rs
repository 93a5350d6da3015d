//! Non-abelian tensor and exterior products of crossed modules over a common base.

use leibxmod::algebra::combination_name;
use leibxmod::fixtures;
use leibxmod::tensor::{exterior_product, tensor_product, MutualActionPair};
use leibxmod::CrossedModule;

fn main() -> leibxmod::Result<()> {
    for q in [fixtures::n2(), fixtures::heisenberg(), fixtures::sl2(), fixtures::leibniz3()] {
        let id = CrossedModule::identity(&q);
        let pair = MutualActionPair::from_crossed_modules(&id, &id)?;
        let tensor = tensor_product(&pair)?;
        let exterior = exterior_product(&id, &id)?;
        println!(
            "{:>3}: {} generators, {} relations, q*q dim {}, q^q dim {}, checks {:?}",
            q.name(),
            tensor.ambient_dim(),
            tensor.relations().dim(),
            tensor.dim(),
            exterior.dim(),
            exterior.checks()
        );
    }

    let n2 = fixtures::n2();
    let id = CrossedModule::identity(&n2);
    let ext = exterior_product(&id, &id)?;
    let e1 = leibxmod::ratlin::unit_vector(2, 0);
    let class = ext.class_mn(&e1, &e1);
    println!("e1*e1 in N2^N2 = {}", combination_name(ext.algebra().basis_names(), &class));
    print!("{}", ext.algebra().check_leibniz());
    Ok(())
}
