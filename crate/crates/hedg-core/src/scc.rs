//! Strongly connected components via an iterative Tarjan pass.

/// Computes the strongly connected components of a graph given as adjacency
/// lists over node indices `0..n`. Returns one sorted index list per
/// component; the component order is not meaningful and is canonicalized by
/// the caller.
pub(crate) fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut lowlink = vec![usize::MAX; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut components: Vec<Vec<usize>> = Vec::new();

    // Explicit DFS frames: (node, position within its adjacency list).
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    component.sort_unstable();
                    components.push(component);
                }
            }
        }
    }

    components
}

#[cfg(test)]
mod tests {
    use super::tarjan_scc;

    fn sorted(mut cs: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        cs.sort();
        cs
    }

    #[test]
    fn four_cycle_is_one_component() {
        let adj = vec![vec![1], vec![2], vec![3], vec![0]];
        assert_eq!(sorted(tarjan_scc(&adj)), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn chain_is_all_singletons() {
        let adj = vec![vec![1], vec![2], vec![]];
        assert_eq!(sorted(tarjan_scc(&adj)), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn self_loop_stays_singleton() {
        let adj = vec![vec![0], vec![]];
        assert_eq!(sorted(tarjan_scc(&adj)), vec![vec![0], vec![1]]);
    }

    #[test]
    fn two_blocks() {
        // 0 <-> 1 -> 2 <-> 3
        let adj = vec![vec![1], vec![0, 2], vec![3], vec![2]];
        assert_eq!(sorted(tarjan_scc(&adj)), vec![vec![0, 1], vec![2, 3]]);
    }
}
