//! Crossed modules: axioms, centers, abelianization and Liezation.

use leibxmod::fixtures;

fn main() -> leibxmod::Result<()> {
    for xm in fixtures::crossed_modules() {
        let report = xm.check();
        let p = xm.predicates();
        println!(
            "{:<24} dims {:?} valid {} perfect {} abelian {} center {:?} derived {:?}",
            xm.name(),
            xm.dims(),
            report.is_valid(),
            p.is_perfect,
            p.is_abelian,
            xm.center().dims(),
            xm.derived().dims()
        );
    }

    let l3 = leibxmod::CrossedModule::identity(&fixtures::leibniz3());
    let (ab, _) = l3.abelianization()?;
    let (lie, proj) = l3.liezation()?;
    println!("{}: abelianization {:?}, Liezation {:?}", l3.name(), ab.dims(), lie.dims());
    print!("{}", proj.check());
    Ok(())
}
