//! Locating zeros on the critical line and caching the table.
//!
//! ```text
//! cargo run --example zero_table -- 300
//! ```

use zeta_criteria::zeros::{find_zeros_up_to, parse_zero_table, verify_zero_count, ZeroCache};

fn main() -> zeta_criteria::Result<()> {
    let height: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200.0);

    let table = find_zeros_up_to(height, 1e-10)?;
    println!("{} zeros up to {height}, count verified: {}", table.len(), verify_zero_count(&table, height));
    for (i, t) in table.ts().iter().take(5).enumerate() {
        println!("  γ_{} = {t:.12}", i + 1);
    }

    // the text format is one ordinate per line
    let text = table.to_text();
    let back = parse_zero_table(&text)?;
    assert_eq!(back.ts(), table.ts());

    let dir = std::env::temp_dir().join("zeta-criteria-example");
    let cache = ZeroCache::new(&dir);
    let cached = cache.table_up_to(height)?;
    println!("cached {} zeros at {}", cached.len(), cache.path().display());
    Ok(())
}
