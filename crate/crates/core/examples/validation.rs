//! Cross-check every family solver, the exact search and the lower bounds on
//! a small seeded corpus and print the report.

use zforcing::validate::{validate_corpus, CorpusSizes, ValidationConfig};

fn main() -> zforcing::Result<()> {
    let sizes = CorpusSizes {
        trees: 10,
        unicyclic: 10,
        cactus: 5,
        block: 5,
        min_n: 4,
        max_n: 10,
        seed: 42,
    };
    let report = validate_corpus(&ValidationConfig::corpus(sizes)?)?;
    print!("{}", report.to_table());
    std::process::exit(report.exit_code());
}
