//! Every catalog configuration, found in its home tiling and checked.

use percolattice::analysis::{audit_entry, catalog_entries};

fn main() -> percolattice::Result<()> {
    for (name, entry) in catalog_entries() {
        let a = audit_entry(&name, &entry)?;
        println!(
            "{name:<16} {:>2} faces in {:<24} k={} max outside neighbors {:?} -> {}",
            a.faces,
            a.home,
            a.k,
            a.max_external,
            if a.passed() { "tight" } else { "FAIL" }
        );
    }
    Ok(())
}
