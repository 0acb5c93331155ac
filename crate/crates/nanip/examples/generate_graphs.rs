//! Draws one graph from each seeded generator and prints the edge lists.
//! Rerunning with the same seed reproduces the same graphs byte for byte.

use nanip::generate::{gen_gnp, gen_random_connected, gen_random_tree};

fn main() -> nanip::Result<()> {
    let seed = 7;

    let tree = gen_random_tree(8, seed)?;
    println!("random tree, n=8:");
    print!("{}", tree.to_edge_list()?);

    let connected = gen_random_connected(8, 12, seed)?;
    println!("random connected graph, n=8, m=12:");
    print!("{}", connected.to_edge_list()?);

    // G(n, p) keeps each of the C(n, 2) candidate edges independently, so
    // the edge count varies and isolated nodes are possible.
    let gnp = gen_gnp(8, 0.4, seed)?;
    println!("G(8, 0.4) draw: m={}, connected={}", gnp.m(), gnp.is_connected());
    for (u, v) in gnp.edges() {
        println!("{u} {v}");
    }

    let again = gen_random_connected(8, 12, seed)?;
    println!(
        "same seed, same graph: {}",
        connected.to_edge_list()? == again.to_edge_list()?
    );
    Ok(())
}
