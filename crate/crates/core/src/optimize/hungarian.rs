/// Minimum-cost perfect assignment on a square cost matrix.
///
/// Returns the column assigned to each row together with dual potentials
/// `(u, v)` satisfying `u[i] + v[j] <= cost[i][j]` for every pair, with
/// equality on the assignment.
pub(crate) struct Assignment {
    pub(crate) columns: Vec<usize>,
    pub(crate) u: Vec<i64>,
    pub(crate) v: Vec<i64>,
}

impl Assignment {
    pub(crate) fn is_tight(&self, cost: &[Vec<i64>], i: usize, j: usize) -> bool {
        self.u[i] + self.v[j] == cost[i][j]
    }
}

/// Shortest augmenting path Hungarian method, O(n³).
pub(crate) fn solve(cost: &[Vec<i64>]) -> Assignment {
    let n = cost.len();
    // 1-based internally; column 0 is the virtual root of each search.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = i64::MAX;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut columns = vec![0; n];
    for j in 1..=n {
        columns[owner[j] - 1] = j - 1;
    }
    Assignment { columns, u: u[1..].to_vec(), v: v[1..].to_vec() }
}
