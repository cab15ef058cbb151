use super::Graph;

/// Backtracking isomorphism test for small graphs.
///
/// Vertices of `a` are mapped in order of decreasing degree, and a candidate
/// image must have the same degree and agree on adjacency with every vertex
/// already mapped. Exponential in the worst case; intended for graphs with a
/// dozen or so vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let mut sa = deg_a.clone();
    let mut sb = deg_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &order, &deg_a, &deg_b, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    deg_a: &[usize],
    deg_b: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.n() {
        if used[w] || deg_b[w] != deg_a[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a.has_edge(u, v) == b.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(a, b, order, deg_a, deg_b, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}
