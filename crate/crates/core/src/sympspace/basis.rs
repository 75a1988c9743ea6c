use super::index::Rank;
use super::monomial::Monomial;

/// All monomials of total degree `d`, lexicographically ascending in the
/// exponent vector. There are `C(2n+d-1, d)` of them.
pub fn homogeneous_basis(rank: Rank, d: u32) -> Vec<Monomial> {
    let dim = rank.dim();
    let mut out = Vec::new();
    let mut exps = vec![0u32; dim];
    fill(&mut exps, 0, d, &mut out);
    out
}

fn fill(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::from_exps(exps));
        exps[pos] = 0;
        return;
    }
    for v in 0..=remaining {
        exps[pos] = v;
        fill(exps, pos + 1, remaining - v, out);
    }
    exps[pos] = 0;
}

/// Basis of all monomials with degree `<= d`, grouped by degree.
pub fn basis_up_to(rank: Rank, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| homogeneous_basis(rank, k)).collect()
}

/// `C(2n+d-1, d)`.
pub fn homogeneous_dim(rank: Rank, d: u32) -> u64 {
    let top = (rank.dim() as u64) + d as u64 - 1;
    let mut c: u64 = 1;
    for k in 0..d as u64 {
        c = c * (top - k) / (k + 1);
    }
    c
}
