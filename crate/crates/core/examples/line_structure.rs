//! Enumerate the lines (large maximal cliques) of a clique extension and run
//! the incidence checks on them.

use gridspectra::cliques::CliqueConfig;
use gridspectra::graph::{build_grid, clique_extension, ExtensionParams};
use gridspectra::lines::{
    check_intersecting_pair_orders, check_line_count, check_order_histogram, check_two_lines_per_vertex, find_lines,
};

fn main() -> gridspectra::Result<()> {
    let (s, t) = (2, 3);
    let p = ExtensionParams::new(s, t)?;
    let g = clique_extension(&build_grid(t as usize + 1)?, s as usize)?;
    let ls = find_lines(&g, p, CliqueConfig::default())?;

    println!("lines: delta={} alpha={} q={:?}", ls.delta, ls.alpha, ls.q);
    for (i, line) in ls.lines.iter().enumerate() {
        println!("  L{i}: {:?}", line.vertices.as_slice());
    }
    println!("lines through vertex 0: {:?}", ls.lines_through(0));
    println!("two lines per vertex: {}", check_two_lines_per_vertex(&ls, g.order()).holds);
    println!("intersecting pair orders: {}", check_intersecting_pair_orders(&ls, p).holds);
    println!("order histogram: {}", check_order_histogram(&ls, p).all_ok());
    println!("line count: {}", check_line_count(&ls, p));
    Ok(())
}
