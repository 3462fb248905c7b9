// Regenerates the shipped catalog files under data/.
use std::time::Instant;

use cluster_recog::catalog::{generate_exceptional, render_catalog};
use cluster_recog::ExplorationLimits;

fn main() {
    let bases: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    for b in bases {
        let t = Instant::now();
        let es = generate_exceptional(b, ExplorationLimits::default()).unwrap();
        let labels: std::collections::BTreeSet<&str> = es.iter().map(|e| e.label.as_str()).collect();
        eprintln!("base {b}: {} entries, {} labels, {:?}", es.len(), labels.len(), t.elapsed());
        std::fs::write(format!("data/base{b}.catalog"), render_catalog(&es)).unwrap();
    }
}
