//! Weighted (r, s) q-Stirling numbers of both kinds.
//!
//! cargo run --example q_stirling -- [r] [s]

use qmzv::cyclo::CycloCtx;
use qmzv::exactnum::{Rat, Ring};
use qmzv::qstirling::{
    orthogonality_check, rstirling1, stirling1_elementary, stirling1_weighted_sum, stirling2_monotone,
    symbolic_row_at_root, QPoint, StirlingParams, StirlingTable,
};

fn main() -> qmzv::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let r = args.next().unwrap_or(2);
    let s = args.next().unwrap_or(1) as u32;
    let q = QPoint::symbolic_q();

    let first = StirlingTable::new(StirlingParams::first(r, s)?, q.clone());
    let second = StirlingTable::new(StirlingParams::second(r, s)?, q.clone());
    println!("first kind, r={r} s={s}, symbolic q");
    for (n, row) in first.rows(5).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|p| p.to_string_in("q")).collect();
        println!("  n={n}: {}", cells.join(" | "));
    }
    println!("second kind, r={r} s={s}, symbolic q");
    for (n, row) in second.rows(5).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|p| p.to_string_in("q")).collect();
        println!("  n={n}: {}", cells.join(" | "));
    }

    // q = 1, s = 1 gives Broder's r-Stirling numbers
    let classical = StirlingTable::new(StirlingParams::first(r, 1)?, Rat::one());
    let row: Vec<String> = (0..=6).map(|k| classical.entry(6, k).to_string()).collect();
    let broder: Vec<String> = (0..=6).map(|k| rstirling1(6, k, r).map(|v| v.to_string())).collect::<Result<_, _>>()?;
    println!("\nq=1, n=6: {}  (Broder: {})", row.join(" "), broder.join(" "));

    // the same row specialized at zeta_7
    let ctx = CycloCtx::new(7);
    let at_root = symbolic_row_at_root(&first.rows(4)[4], &ctx);
    println!("n=4 at q = zeta_7: {}", at_root.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" | "));

    // closed forms against the recurrence
    let n = 6;
    let m = r + 1;
    println!("\nentry({n},{m}) = {}", first.entry(n, m).to_string_in("q"));
    println!("weighted sum  = {}", stirling1_weighted_sum(n, m, r, s, &q)?.to_string_in("q"));
    let forms = stirling1_elementary(n, 2, r, s, &q)?;
    println!("entry({n},{}) = {}", n - 2, first.entry(n, n - 2).to_string_in("q"));
    println!("  strict / shifted / nested agree: {}", forms.strict == forms.shifted && forms.shifted == forms.nested);
    println!(
        "second-kind entry({n},{}) via monotone sum = {}",
        n - 2,
        stirling2_monotone(n, 2, r, s, &q)?.to_string_in("q")
    );

    let report = orthogonality_check(8, r, s, &q)?;
    println!("\n{}", report.summary());
    Ok(())
}
