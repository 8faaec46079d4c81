//! Reference computations that share no code with the library. They are
//! deliberately naive: plain loops over raw tables.

#![allow(dead_code, clippy::needless_range_loop)]

pub type Table = Vec<Vec<usize>>;

pub fn table_of(q: &quandles::FiniteQuandle) -> Table {
    q.rows()
}

pub fn tak_table(n: usize) -> Table {
    (0..n)
        .map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect())
        .collect()
}

pub fn trivial_table(n: usize) -> Table {
    (0..n).map(|x| vec![x; n]).collect()
}

/// All permutations of `0..n` in lexicographic order (Heap-free, by recursion).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn right_distributive(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[t[x][z]][t[y][z]])))
}

/// `p` relabels `a` into `b` when `p(a[x][y]) = b[p x][p y]`.
pub fn is_iso(a: &Table, b: &Table, p: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|x| (0..n).all(|y| p[a[x][y]] == b[p[x]][p[y]]))
}

pub fn brute_isomorphic(a: &Table, b: &Table) -> bool {
    a.len() == b.len() && permutations(a.len()).iter().any(|p| is_iso(a, b, p))
}

/// Quandles of order `n` up to isomorphism by raw search: every column is a
/// permutation fixing its own index, tables failing right distributivity
/// are dropped, and survivors are compared against kept representatives by
/// trying every relabelling.
pub fn raw_quandle_count(n: usize) -> usize {
    let column_choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|y| permutations(n).into_iter().filter(|p| p[y] == y).collect())
        .collect();
    let perms = permutations(n);
    let mut reps: Vec<Table> = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let t: Table = (0..n)
            .map(|x| (0..n).map(|y| column_choices[y][idx[y]][x]).collect())
            .collect();
        if right_distributive(&t) && !reps.iter().any(|r| perms.iter().any(|p| is_iso(&t, r, p))) {
            reps.push(t);
        }
        let mut k = 0;
        loop {
            if k == n {
                return reps.len();
            }
            idx[k] += 1;
            if idx[k] < column_choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn inverse_columns(t: &Table) -> Table {
    let n = t.len();
    let mut inv = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            inv[t[x][y]][y] = x;
        }
    }
    inv
}

/// Closed under the operation and its right inverse.
pub fn closed(t: &Table, mask: u64) -> bool {
    let n = t.len();
    let inv = inverse_columns(t);
    let ms = members(mask, n);
    ms.iter().all(|&x| {
        ms.iter()
            .all(|&y| mask >> t[x][y] & 1 == 1 && mask >> inv[x][y] & 1 == 1)
    })
}

/// Subquandles as bit masks, by testing every subset.
pub fn powerset_subquandles(t: &Table) -> Vec<u64> {
    (0..1u64 << t.len()).filter(|&m| closed(t, m)).collect()
}

/// Smallest closed mask containing `seed`, by fixpoint iteration.
pub fn closure(t: &Table, seed: u64) -> u64 {
    let n = t.len();
    let inv = inverse_columns(t);
    let mut m = seed;
    loop {
        let mut next = m;
        for x in members(m, n) {
            for y in members(m, n) {
                next |= 1 << t[x][y];
                next |= 1 << inv[x][y];
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

pub fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

pub fn mask_of(s: &quandles::ElementSet) -> u64 {
    s.iter().fold(0, |m, x| m | 1 << x)
}

/// Maximal proper closed subsets.
pub fn maximal_masks(t: &Table) -> Vec<u64> {
    let full = full_mask(t.len());
    let proper: Vec<u64> = powerset_subquandles(t)
        .into_iter()
        .filter(|&m| m != full)
        .collect();
    proper
        .iter()
        .copied()
        .filter(|&m| !proper.iter().any(|&o| o != m && o & m == m))
        .collect()
}

/// Orbit of `x` under the group generated by the columns.
pub fn orbit(t: &Table, x: usize) -> u64 {
    let n = t.len();
    let mut m = 1u64 << x;
    loop {
        let mut next = m;
        for a in members(m, n) {
            for y in 0..n {
                next |= 1 << t[a][y];
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Group generated by permutations, as a sorted list.
pub fn generated_group(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = std::collections::BTreeSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(g) = stack.pop() {
        for s in gens {
            let h: Vec<usize> = (0..n).map(|x| s[g[x]]).collect();
            if seen.insert(h.clone()) {
                stack.push(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// Invariant factors of an integer matrix by a column-first Euclidean
/// reduction with swap-on-remainder pivoting, in machine integers.
/// Returns the nonzero diagonal sorted by divisibility.
pub fn oracle_invariant_factors(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] != 0)
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // Columns first: clear row t.
            for j in t + 1..cols {
                while a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            let mut disturbed = false;
            for i in t + 1..rows {
                while a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    for j in 0..cols {
                        let v = a[t][j];
                        a[i][j] -= q * v;
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        disturbed = true;
                    }
                }
            }
            if disturbed {
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        let v = a[i][j];
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// The abelianized relation matrix `x⊳y − 2y + x` built straight from a table.
pub fn oracle_adtak_factors(t: &Table) -> Vec<u64> {
    let n = t.len();
    let mut m = vec![vec![0i128; n]; n * n];
    for x in 0..n {
        for y in 0..n {
            let r = &mut m[x * n + y];
            r[t[x][y]] += 1;
            r[y] -= 2;
            r[x] += 1;
        }
    }
    let diag = oracle_invariant_factors(m);
    let rank = diag.len();
    let mut out: Vec<u64> = diag
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| d as u64)
        .collect();
    out.extend(std::iter::repeat_n(0, n - rank));
    out
}
