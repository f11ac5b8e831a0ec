use crate::exactnum::Rat;

/// `H_n = 1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: usize) -> Rat {
    (1..=n as i64).map(|i| Rat::new(1, i)).sum()
}

/// Hyperharmonic number `h_n^{(k)} = sum_{i<=n} h_i^{(k-1)}`, `h_n^{(1)} = H_n`.
pub fn hyperharmonic(n: usize, k: usize) -> Rat {
    assert!(k >= 1, "hyperharmonic numbers start at k = 1");
    let mut row: Vec<Rat> = (1..=n).map(harmonic).collect();
    for _ in 1..k {
        let mut run = Rat::from(0);
        for v in row.iter_mut() {
            run = run + &*v;
            *v = run.clone();
        }
    }
    row.last().cloned().unwrap_or_else(|| Rat::from(0))
}
