//! One line per acceptance criterion. Every comparison is exact; the only
//! tolerances are the runtime budgets below.

use std::process::Command;
use std::time::{Duration, Instant};

use superkm_core::verify::{self, Bounds, Check};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn(&Bounds) -> Vec<Check>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn verify_json() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_superkm"))
        .args(["verify", "--format", "json"])
        .output()
        .expect("superkm runs");
    out.stdout
}

fn determinism(_: &Bounds) -> Vec<Check> {
    let (first, second) = (verify_json(), verify_json());
    let bad = if first == second && !first.is_empty() {
        vec![]
    } else {
        vec![format!("reports differ ({} vs {} bytes)", first.len(), second.len())]
    };
    vec![Check::tally("two verify runs are byte-identical", "verify determinism", 1, &bad)]
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "worked form values on odd sl2", budget: secs(1), run: |_| verify::example_values() },
        Criterion { id: 2, title: "cq_form = graphical_form", budget: secs(300), run: verify::sesqui },
        Criterion { id: 3, title: "f_form = permutation oracle", budget: secs(30), run: verify::f_oracle },
        Criterion { id: 4, title: "Serre kernels", budget: secs(120), run: verify::serre_kernels },
        Criterion {
            id: 5,
            title: "symmetry involutions and <x,y> = <psi y, psi x>",
            budget: secs(60),
            run: verify::symmetries,
        },
        Criterion { id: 6, title: "quiver Hecke relation suite", budget: secs(180), run: verify::qhsa },
        Criterion { id: 7, title: "graded dim H_n e(i^n)", budget: secs(180), run: verify::necks },
        Criterion { id: 8, title: "graded Serre sum vanishes", budget: secs(600), run: verify::categorified_serre },
        Criterion { id: 9, title: "relation catalog homogeneity", budget: secs(10), run: |b| verify::lint(b.h_range) },
        Criterion { id: 10, title: "verify determinism", budget: secs(900), run: determinism },
    ];
    let bounds = Bounds::default();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let checks = (c.run)(&bounds);
        let elapsed = start.elapsed();
        let bad: Vec<&Check> = checks.iter().filter(|k| !k.passed()).collect();
        let ok = bad.is_empty() && !checks.is_empty() && elapsed <= c.budget;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({} checks, {} failed, exact equality, {:.1}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            checks.len(),
            bad.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for k in bad.iter().take(5) {
            println!("    {} [{}]: {}", k.name, k.paper_ref, k.detail);
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
