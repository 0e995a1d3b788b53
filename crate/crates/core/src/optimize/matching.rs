use std::collections::VecDeque;

const UNMATCHED: usize = usize::MAX;

/// Hopcroft–Karp maximum bipartite matching on an `n × n` graph given as
/// adjacency lists from rows to columns. Returns the column of each row when
/// the matching is perfect.
pub(crate) fn perfect_matching(adjacency: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adjacency.len();
    let mut row_match = vec![UNMATCHED; n];
    let mut col_match = vec![UNMATCHED; n];
    let mut dist = vec![0usize; n];
    let mut size = 0;
    while bfs(adjacency, &row_match, &col_match, &mut dist) {
        let mut next = vec![0usize; n];
        for row in 0..n {
            if row_match[row] == UNMATCHED && dfs(row, adjacency, &mut row_match, &mut col_match, &mut dist, &mut next) {
                size += 1;
            }
        }
    }
    (size == n).then_some(row_match)
}

fn bfs(adjacency: &[Vec<usize>], row_match: &[usize], col_match: &[usize], dist: &mut [usize]) -> bool {
    let mut queue = VecDeque::new();
    for (row, &m) in row_match.iter().enumerate() {
        if m == UNMATCHED {
            dist[row] = 0;
            queue.push_back(row);
        } else {
            dist[row] = usize::MAX;
        }
    }
    let mut found = false;
    while let Some(row) = queue.pop_front() {
        for &col in &adjacency[row] {
            match col_match[col] {
                UNMATCHED => found = true,
                other if dist[other] == usize::MAX => {
                    dist[other] = dist[row] + 1;
                    queue.push_back(other);
                }
                _ => {}
            }
        }
    }
    found
}

fn dfs(
    row: usize,
    adjacency: &[Vec<usize>],
    row_match: &mut [usize],
    col_match: &mut [usize],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[row] < adjacency[row].len() {
        let col = adjacency[row][next[row]];
        next[row] += 1;
        let other = col_match[col];
        let advance = other == UNMATCHED
            || (dist[other] == dist[row] + 1 && dfs(other, adjacency, row_match, col_match, dist, next));
        if advance {
            row_match[row] = col;
            col_match[col] = row;
            return true;
        }
    }
    dist[row] = usize::MAX;
    false
}

/// Lexicographically smallest perfect matching of the graph `allowed`,
/// starting from any perfect matching `matching` of that graph.
///
/// Rows are fixed in index order; row `i` moves to a smaller column `j`
/// whenever an alternating cycle through `(i, j)` exists among the rows that
/// are not fixed yet.
pub(crate) fn lex_min_perfect_matching(
    allowed: impl Fn(usize, usize) -> bool,
    mut matching: Vec<usize>,
) -> Vec<usize> {
    let n = matching.len();
    let mut owner = vec![0; n];
    for (row, &col) in matching.iter().enumerate() {
        owner[col] = row;
    }
    for row in 0..n {
        for col in 0..matching[row] {
            if !allowed(row, col) || owner[col] < row {
                continue;
            }
            // Give `col` to `row`; its owner must reach the column `row` frees.
            let target = matching[row];
            let mut visited = vec![false; n];
            let mut parent = vec![UNMATCHED; n];
            visited[col] = true;
            let mut stack = vec![col];
            let mut reached = false;
            'search: while let Some(c) = stack.pop() {
                let r = owner[c];
                for next in 0..n {
                    if !visited[next] && allowed(r, next) && (next == target || owner[next] > row) {
                        visited[next] = true;
                        parent[next] = c;
                        if next == target {
                            reached = true;
                            break 'search;
                        }
                        stack.push(next);
                    }
                }
            }
            if !reached {
                continue;
            }
            // Shift every column on the path one step back along it.
            let mut c = target;
            while c != col {
                let prev = parent[c];
                let r = owner[prev];
                matching[r] = c;
                owner[c] = r;
                c = prev;
            }
            matching[row] = col;
            owner[col] = row;
            break;
        }
    }
    matching
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perfect(allowed: &dyn Fn(usize, usize) -> bool, n: usize) -> Vec<Vec<usize>> {
        fn go(allowed: &dyn Fn(usize, usize) -> bool, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for c in 0..n {
                if !cur.contains(&c) && allowed(cur.len(), c) {
                    cur.push(c);
                    go(allowed, n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(allowed, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn agrees_with_enumeration_on_random_graphs() {
        let mut state = 99u64;
        for n in 1..=6 {
            for _ in 0..60 {
                let bits: Vec<bool> = (0..n * n)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        !(state >> 60).is_multiple_of(3)
                    })
                    .collect();
                let allowed = |r: usize, c: usize| bits[r * n + c];
                let adjacency: Vec<Vec<usize>> = (0..n).map(|r| (0..n).filter(|&c| allowed(r, c)).collect()).collect();
                let every = all_perfect(&allowed, n);
                match perfect_matching(&adjacency) {
                    None => assert!(every.is_empty()),
                    Some(m) => {
                        assert!(every.contains(&m));
                        let lex = lex_min_perfect_matching(allowed, m);
                        assert_eq!(&lex, every.iter().min().unwrap());
                    }
                }
            }
        }
    }
}
