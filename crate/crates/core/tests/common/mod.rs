//! Brute-force oracles. They read only the order and edge list of a graph and
//! share no code with the library's algorithms.
#![allow(dead_code)]

use matchext::{Graph, Rational};

pub type Edge = (usize, usize);

pub fn edges(g: &Graph) -> Vec<Edge> {
    g.edges().to_vec()
}

fn adjacency(n: usize, es: &[Edge]) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in es {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Largest matching by trying every edge as "in" or "out".
pub fn matching_number(n: usize, es: &[Edge]) -> usize {
    fn go(i: usize, es: &[Edge], used: &mut Vec<bool>, size: usize, best: &mut usize, n: usize) {
        if size > *best {
            *best = size;
        }
        if i == es.len() || size + (n - 2 * size) / 2 <= *best {
            return;
        }
        let (u, v) = es[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            go(i + 1, es, used, size + 1, best, n);
            used[u] = false;
            used[v] = false;
        }
        go(i + 1, es, used, size, best, n);
    }
    let mut best = 0;
    go(0, es, &mut vec![false; n], 0, &mut best, n);
    best
}

/// Perfect matching on `alive` vertices using only `allowed` edges:
/// match the smallest alive vertex every way possible.
pub fn has_pm_on(alive: &[bool], allowed: &[Vec<bool>]) -> bool {
    let mut alive = alive.to_vec();
    fn go(alive: &mut Vec<bool>, allowed: &[Vec<bool>]) -> bool {
        let Some(u) = alive.iter().position(|&a| a) else { return true };
        alive[u] = false;
        for v in 0..alive.len() {
            if alive[v] && allowed[u][v] {
                alive[v] = false;
                if go(alive, allowed) {
                    alive[v] = true;
                    alive[u] = true;
                    return true;
                }
                alive[v] = true;
            }
        }
        alive[u] = true;
        false
    }
    go(&mut alive, allowed)
}

pub fn has_pm(n: usize, es: &[Edge]) -> bool {
    has_pm_on(&vec![true; n], &adjacency(n, es))
}

/// Some perfect matching contains all of `required` and none of `forbidden`.
pub fn pm_with(n: usize, es: &[Edge], required: &[Edge], forbidden: &[Edge]) -> bool {
    let mut allowed = adjacency(n, es);
    for &(u, v) in forbidden {
        allowed[u][v] = false;
        allowed[v][u] = false;
    }
    let mut alive = vec![true; n];
    for &(u, v) in required {
        if !alive[u] || !alive[v] || !allowed[u][v] {
            return false;
        }
        alive[u] = false;
        alive[v] = false;
    }
    has_pm_on(&alive, &allowed)
}

/// All matchings with exactly `k` edges, as edge lists in lexicographic order.
pub fn k_matchings(n: usize, es: &[Edge], k: usize) -> Vec<Vec<Edge>> {
    fn go(i: usize, es: &[Edge], k: usize, used: &mut Vec<bool>, cur: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in i..es.len() {
            let (u, v) = es[j];
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                cur.push(es[j]);
                go(j + 1, es, k, used, cur, out);
                cur.pop();
                used[u] = false;
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, es, k, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Random graph from a fixed seed, by an independent coin per pair.
pub fn random_graph(n: usize, p_percent: u32, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let es: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_range(0..100) < p_percent)
        .collect();
    Graph::new(n, es).unwrap()
}

/// `min` by size then numeric mask, i.e. colex among equal sizes.
pub fn canonical_witness(sets: &[Vec<usize>]) -> Vec<usize> {
    let mask = |s: &Vec<usize>| s.iter().fold(0u64, |m, &v| m | 1 << v);
    sets.iter().min_by_key(|s| (s.len(), mask(s))).cloned().unwrap_or_default()
}

pub fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Component sizes of the graph on `alive`.
pub fn component_sizes(alive: &[bool], es: &[Edge]) -> Vec<usize> {
    let n = alive.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in es {
        if alive[u] && alive[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    let mut sizes = std::collections::BTreeMap::new();
    for v in (0..n).filter(|&v| alive[v]) {
        *sizes.entry(find(&mut parent, v)).or_insert(0) += 1;
    }
    sizes.into_values().collect()
}

fn alive_without(n: usize, removed: &[usize]) -> Vec<bool> {
    let mut a = vec![true; n];
    for &v in removed {
        a[v] = false;
    }
    a
}

pub fn is_connected(n: usize, es: &[Edge]) -> bool {
    component_sizes(&vec![true; n], es).len() <= 1
}

/// `S` with `c₀(G − S) > |S|`, if any.
pub fn tutte_violator(n: usize, es: &[Edge]) -> Option<Vec<usize>> {
    (0..=n).flat_map(|s| subsets_of_size(n, s)).find(|s| {
        let odd = component_sizes(&alive_without(n, s), es)
            .into_iter()
            .filter(|c| c % 2 == 1)
            .count();
        odd > s.len()
    })
}

/// `(value, all optimal sets)` for `min |N(S)|/|S|` over nonempty `S` with `N(S) ≠ V`.
pub fn binding_number(n: usize, es: &[Edge]) -> Option<(Rational, Vec<Vec<usize>>)> {
    let a = adjacency(n, es);
    let mut best: Option<(Rational, Vec<Vec<usize>>)> = None;
    for mask in 1u64..1 << n {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let nb = (0..n).filter(|&v| s.iter().any(|&u| a[u][v])).count();
        if nb == n {
            continue;
        }
        let r = Rational::new(nb as i64, s.len() as i64);
        match &mut best {
            Some((b, sets)) if *b == r => sets.push(s),
            Some((b, _)) if *b < r => {}
            _ => best = Some((r, vec![s])),
        }
    }
    best
}

/// `(value, all optimal sets)` for `min |S|/c(G − S)` over cut sets; `+∞`
/// with no sets when there is no cut set, `0` with `∅` when disconnected.
pub fn toughness(n: usize, es: &[Edge]) -> (Rational, Vec<Vec<usize>>) {
    if !is_connected(n, es) {
        return (Rational::zero(), vec![vec![]]);
    }
    let mut best: Option<(Rational, Vec<Vec<usize>>)> = None;
    for mask in 1u64..1 << n {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let c = component_sizes(&alive_without(n, &s), es).len();
        if c < 2 {
            continue;
        }
        let r = Rational::new(s.len() as i64, c as i64);
        match &mut best {
            Some((b, sets)) if *b == r => sets.push(s),
            Some((b, _)) if *b < r => {}
            _ => best = Some((r, vec![s])),
        }
    }
    best.unwrap_or((Rational::infinity(), vec![]))
}

/// Smallest `S` whose removal disconnects `G` or leaves one vertex.
pub fn vertex_connectivity(n: usize, es: &[Edge]) -> usize {
    (0..n)
        .find(|&s| {
            subsets_of_size(n, s).into_iter().any(|set| {
                n - s <= 1 || component_sizes(&alive_without(n, &set), es).len() > 1
            })
        })
        .unwrap_or(n.saturating_sub(1))
}

/// Shortest cycle: for each edge, shortest detour between its ends.
pub fn girth(n: usize, es: &[Edge]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &(s, t)) in es.iter().enumerate() {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (j, &(a, b)) in es.iter().enumerate() {
                if j == i {
                    continue;
                }
                let w = if a == u { b } else if b == u { a } else { continue };
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist[t] != usize::MAX {
            let len = dist[t] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

pub fn is_k_extendable(n: usize, es: &[Edge], k: usize) -> bool {
    has_pm(n, es) && k_matchings(n, es, k).iter().all(|m| pm_with(n, es, m, &[]))
}

pub fn is_n_factor_critical(n: usize, es: &[Edge], r: usize) -> bool {
    subsets_of_size(n, r).iter().all(|s| {
        let alive = alive_without(n, s);
        has_pm_on(&alive, &adjacency(n, es))
    })
}

/// Subgraph `G − S`, relabelled.
pub fn delete(n: usize, es: &[Edge], s: &[usize]) -> (usize, Vec<Edge>) {
    let keep: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
    let id = |v: usize| keep.iter().position(|&x| x == v);
    let sub = es
        .iter()
        .filter_map(|&(u, v)| Some((id(u)?, id(v)?)))
        .collect();
    (keep.len(), sub)
}

pub fn is_nk_extendable(n: usize, es: &[Edge], r: usize, k: usize) -> bool {
    subsets_of_size(n, r).iter().all(|s| {
        let (m, sub) = delete(n, es, s);
        let ms = k_matchings(m, &sub, k);
        !ms.is_empty() && ms.iter().all(|mm| pm_with(m, &sub, mm, &[]))
    })
}

/// `G` has a perfect matching and every pair of edge-disjoint matchings
/// `|M| = m`, `|N| = nn` admits a perfect matching containing `M` and avoiding `N`.
pub fn is_emn_extendable(n: usize, es: &[Edge], m: usize, nn: usize, strict: bool) -> bool {
    if !has_pm(n, es) {
        return false;
    }
    let ms = k_matchings(n, es, m);
    let ns = k_matchings(n, es, nn);
    ms.iter().all(|mm| {
        ns.iter().all(|nm| {
            let shares_edge = nm.iter().any(|e| mm.contains(e));
            let touches = nm
                .iter()
                .any(|&(a, b)| mm.iter().any(|&(c, d)| a == c || a == d || b == c || b == d));
            if shares_edge || (strict && touches) {
                return true;
            }
            pm_with(n, es, mm, nm)
        })
    })
}

pub fn is_factor_critical(n: usize, es: &[Edge]) -> bool {
    n % 2 == 1 && is_n_factor_critical(n, es, 1)
}

/// Vertices missed by at least one maximum matching.
pub fn gallai_d(n: usize, es: &[Edge]) -> Vec<usize> {
    let nu = matching_number(n, es);
    (0..n)
        .filter(|&v| {
            let (m, sub) = delete(n, es, &[v]);
            matching_number(m, &sub) == nu
        })
        .collect()
}
