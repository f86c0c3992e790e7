use crate::error::{Error, Result};
use crate::gallery::AbelianCayley;
use crate::graph::GeodPath;

/// Interleaves the increments of `γ` on `[0, 2n]` into a path `κ` on
/// `[−n, n]` with `κ(0) = 0`: even-indexed increments are laid out forward
/// from 0 and odd-indexed ones backward.
///
/// `κ(m) = Σ_{k<m} s_{2k}` and `κ(−m) = −Σ_{k<m} s_{2k+1}`, where
/// `s_k = γ(k+1) − γ(k)`. In an abelian group this gives
/// `κ(n) − κ(−n) = γ(2n) − γ(0)`.
pub fn fold_geodesic<G: AbelianCayley>(
    g: &G,
    gamma: &GeodPath<G::Vertex>,
) -> Result<GeodPath<G::Vertex>> {
    if gamma.vertices.is_empty() {
        return Err(Error::InvalidPath("empty path".into()));
    }
    if gamma.len() % 2 != 0 {
        return Err(Error::InvalidPath(format!(
            "folding needs even length, got {}",
            gamma.len()
        )));
    }
    let steps: Vec<G::Vertex> = gamma
        .vertices
        .windows(2)
        .map(|w| g.sub(&w[1], &w[0]))
        .collect();
    let n = gamma.len() / 2;
    let mut forward = vec![g.zero()];
    let mut backward = vec![g.zero()];
    for k in 0..n {
        forward.push(g.add(&forward[k], &steps[2 * k]));
        backward.push(g.sub(&backward[k], &steps[2 * k + 1]));
    }
    let mut vertices: Vec<G::Vertex> = backward.into_iter().skip(1).rev().collect();
    vertices.extend(forward);
    Ok(GeodPath::with_base(-(n as i64), vertices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::IntegerCayley;

    #[test]
    fn line_folds_to_a_centred_line() {
        let g = IntegerCayley::new(None, &[1], "Z").unwrap();
        let gamma = GeodPath::new(vec![0, 1, 2, 3, 4]);
        let kappa = fold_geodesic(&g, &gamma).unwrap();
        assert_eq!(kappa.base, -2);
        assert_eq!(kappa.vertices, vec![-2, -1, 0, 1, 2]);
        assert!(fold_geodesic(&g, &GeodPath::new(vec![0, 1])).is_err());
    }
}
