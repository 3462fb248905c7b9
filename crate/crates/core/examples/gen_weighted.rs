// Regenerates data/weighted.catalog: minimal 2-infinite diagrams with a
// weight above 1 that are neither series members nor fixture entries.
use std::time::Instant;

use cluster_recog::catalog::{generate_minimal_by_extension, label_extension_results, render_catalog, EntryKind};
use cluster_recog::explorer::Decider;

fn main() {
    let max_n: usize = std::env::args().nth(1).map_or(5, |a| a.parse().unwrap());
    let dec = Decider::default();
    let mut keep = Vec::new();
    for n in 3..=max_n {
        let t = Instant::now();
        let ds = generate_minimal_by_extension(n, 3, &dec).unwrap();
        let es = label_extension_results(n, &ds, dec.limits()).unwrap();
        for e in &es {
            eprintln!("  n={n} {} {}", e.kind, e.label);
        }
        eprintln!("n={n}: {} groups, {:?}", es.len(), t.elapsed());
        keep.extend(es.into_iter().filter(|e| matches!(e.kind, EntryKind::Generated(_)) && e.diagram().max_weight() > 1));
    }
    std::fs::write("data/weighted.catalog", render_catalog(&keep)).unwrap();
}
