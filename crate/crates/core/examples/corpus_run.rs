// Running a corpus entry against its recorded expectations.

use hgx::corpus::{self, Provenance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["slq2", "oxg"] {
        for o in corpus::run_expected(name)? {
            let source = match o.provenance {
                Provenance::Published(_) => "published",
                Provenance::Immediate => "immediate",
                Provenance::Computed => "computed",
            };
            let mark = if o.matched { "ok  " } else { "diff" };
            println!("{mark} {name} {} [{}] ({source}): expected {}, observed {}", o.check, o.params, o.expected, o.observed);
        }
    }
    println!("{} entries in the corpus", corpus::entries().len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
