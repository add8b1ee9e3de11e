use super::{check_searchable, verify_cut, ConnectivityError, CutCertificate, Kappa2, Kappa2Result, SearchStats};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`kappa2_bruteforce`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 21;

/// `kappa2` by testing every vertex subset in order of size. All minimum cuts
/// are returned, ordered by `S`.
pub fn kappa2_bruteforce(g: &Graph) -> Result<Kappa2Result, ConnectivityError> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(ConnectivityError::TooLarge(n));
    }
    check_searchable(g)?;
    let mut nodes = 0u64;
    for size in 0..=n {
        let mut cuts = Vec::new();
        for_each_subset(n, size, |mask| {
            nodes += 1;
            let s = VertexSet::from_vertices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if let Ok(cert) = verify_cut(g, &s) {
                cuts.push(cert);
            }
        });
        if !cuts.is_empty() {
            cuts.sort_by(|x, y| x.s.cmp(&y.s));
            return Ok(Kappa2Result {
                value: Kappa2::Value(size),
                closed: true,
                certificate: Some(cuts[0].clone()),
                optimal_cuts: Some(cuts),
                stats: SearchStats {
                    nodes,
                    ..SearchStats::default()
                },
            });
        }
    }
    Ok(Kappa2Result {
        value: Kappa2::NoValidCut,
        closed: true,
        certificate: None,
        optimal_cuts: Some(Vec::<CutCertificate>::new()),
        stats: SearchStats {
            nodes,
            ..SearchStats::default()
        },
    })
}

/// Calls `f` on every `size`-subset of `0..n` as a bit mask (Gosper's hack).
fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(u32)) {
    if size == 0 {
        f(0);
        return;
    }
    if size > n {
        return;
    }
    let limit = 1u64 << n;
    let mut mask = (1u64 << size) - 1;
    while mask < limit {
        f(mask as u32);
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}
