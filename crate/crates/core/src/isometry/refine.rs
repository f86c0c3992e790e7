/// Colour refinement to the coarsest stable partition finer than `colors`.
///
/// Each round recolours a vertex by its colour together with the sorted
/// colours of its neighbours, then renumbers signatures by rank. Colours
/// stay canonical: they depend only on the signatures, never on vertex
/// numbering.
pub(crate) fn refine(adj: &[Vec<usize>], mut colors: Vec<usize>) -> Vec<usize> {
    colors = compress(colors.into_iter().map(|c| (c, Vec::new())).collect());
    let mut count = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = adj
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                let mut s: Vec<usize> = nbrs.iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let next = compress(sigs);
        let next_count = distinct(&next);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

fn compress(sigs: Vec<(usize, Vec<usize>)>) -> Vec<usize> {
    let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(&s).expect("present"))
        .collect()
}

fn distinct(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

/// Number of vertices per colour.
pub(crate) fn cell_sizes(colors: &[usize]) -> Vec<usize> {
    let mut sizes = vec![0; distinct(colors)];
    for &c in colors {
        sizes[c] += 1;
    }
    sizes
}

/// Splits vertex `v` off its cell. Every colour is doubled and `v` takes
/// the odd slot just above its old cell, which keeps the result canonical.
pub(crate) fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = colors.iter().map(|&c| 2 * c).collect();
    out[v] += 1;
    out
}
