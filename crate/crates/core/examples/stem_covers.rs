//! Classifying central extensions and building the stem cover of a perfect crossed module.

use leibxmod::extensions::{classify, prop41_crosscheck, six_term_report, stem_cover_of_perfect, theta_star};
use leibxmod::fixtures;
use leibxmod::CrossedModule;

fn main() -> leibxmod::Result<()> {
    let e = fixtures::n2_over_k();
    println!("{}: {:?}", e.name(), classify(&e)?);
    println!("theta* base map {:?}", theta_star(&e)?.base_map().matrix());

    let six = six_term_report(&e)?;
    for node in &six.nodes {
        println!("  {:<12} image {:?} kernel {:?} exact {}", node.node, node.incoming_image.dims(), node.outgoing_kernel.dims(), node.exact);
    }

    for e in fixtures::central_extensions().iter().take(12) {
        let r = prop41_crosscheck(e)?;
        println!("{:<40} stem {} cover {} criteria agree {}", e.name(), r.stem, r.cover, r.agrees());
    }

    let sl2 = CrossedModule::identity(&fixtures::sl2());
    let cover = stem_cover_of_perfect(&sl2)?;
    println!("stem cover of {}: {} with kernel {:?}", sl2.name(), cover.total().name(), cover.kernel().dims());
    match stem_cover_of_perfect(&CrossedModule::identity(&fixtures::n2())) {
        Ok(_) => println!("unexpected cover of N2"),
        Err(err) => println!("N2: {err}"),
    }
    Ok(())
}
