//! Structure constants, the Leibniz identity, and ideals of small algebras.

use leibxmod::algebra::combination_name;
use leibxmod::fixtures;
use leibxmod::ratlin::{format_rational, rat, vector};
use leibxmod::LeibnizAlgebra;

fn describe(a: &LeibnizAlgebra) {
    let names = a.basis_names();
    let span = |s: &leibxmod::Subspace| {
        let v: Vec<String> = s.basis().iter().map(|b| combination_name(names, b)).collect();
        format!("span{{{}}}", v.join(", "))
    };
    println!(
        "{:>4}: dim {}, Lie {}, derived {}, center {}",
        a.name(),
        a.dim(),
        a.is_lie(),
        span(&a.derived()),
        span(&a.center())
    );
}

fn main() -> leibxmod::Result<()> {
    for a in fixtures::algebras() {
        describe(&a);
    }

    let n2 = fixtures::n2();
    let x = vector(&[1, 1]);
    let sq: Vec<String> = n2.bracket(&x, &x).iter().map(format_rational).collect();
    println!("[e1+e2, e1+e2] in N2 = [{}]", sq.join(", "));

    let bad = LeibnizAlgebra::new("bad", vec!["e".into()], [(0, 0, vec![rat(1)])])?;
    print!("{}", bad.check_leibniz());

    let (quotient, proj) = n2.quotient(&n2.derived())?;
    println!("N2 / [N2, N2] = {} of dim {}, projection {:?}", quotient.name(), quotient.dim(), proj.matrix());
    Ok(())
}
