use hedg_core::NodeSet;

use crate::{DistError, FiniteDist};

/// Default convergence threshold: total-variation change per full cycle.
pub const DEFAULT_IPF_TOL: f64 = 1e-10;

/// Default cap on full cycles through the clique list.
pub const DEFAULT_IPF_MAX_ITERS: usize = 1000;

/// Result of an iterative-proportional-fitting run.
#[derive(Debug, Clone)]
pub struct IpfFit {
    /// The fitted table (best iterate reached, converged or not).
    pub fitted: FiniteDist,
    /// Total-variation distance between the fitted table and the target.
    pub tv_distance: f64,
    /// Whether successive cycles stopped moving before the iteration cap.
    pub converged: bool,
    /// Number of full cycles performed.
    pub iterations: usize,
}

/// Projects `p` onto the set of distributions that factorize over the given
/// cliques, by cyclically matching each clique marginal starting from the
/// uniform table.
///
/// The cliques must jointly cover every variable of `p`.  Failure to converge
/// within `max_iters` cycles is reported through [`IpfFit::converged`], not as
/// an error.  The returned `tv_distance` measures how far `p` is from the
/// fitted product — zero (up to tolerance) exactly when `p` itself factorizes
/// over the cliques.
pub fn ipf_fit(
    p: &FiniteDist,
    cliques: &[NodeSet],
    max_iters: usize,
    tol: f64,
) -> Result<IpfFit, DistError> {
    let names: NodeSet = p.vars().iter().map(|(v, _)| v.clone()).collect();
    let mut covered = NodeSet::new();
    for c in cliques {
        for v in c {
            if !names.contains(v) {
                return Err(DistError::UnknownVariable(v.as_str().to_owned()));
            }
            covered.insert(v.clone());
        }
    }
    if let Some(missing) = names.iter().find(|v| !covered.contains(*v)) {
        return Err(DistError::UncoveredVariable(missing.as_str().to_owned()));
    }

    // Precompute, per clique, the joint-table positions of its variables and
    // the target marginal.
    struct CliquePlan {
        positions: Vec<usize>,
        strides: Vec<usize>,
        set: NodeSet,
        target: FiniteDist,
    }
    let mut plans = Vec::with_capacity(cliques.len());
    for c in cliques {
        let target = p.marginal(c)?;
        let positions: Vec<usize> = (0..p.vars().len())
            .filter(|&i| c.contains(&p.vars()[i].0))
            .collect();
        let mut strides = vec![1usize; positions.len()];
        for i in (0..positions.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * p.vars()[positions[i + 1]].1;
        }
        plans.push(CliquePlan {
            positions,
            strides,
            set: c.clone(),
            target,
        });
    }

    let vars = p.vars().to_vec();
    let mut q = FiniteDist::uniform(vars.clone())?;
    let mut converged = false;
    let mut iterations = 0usize;

    for _ in 0..max_iters {
        let before = q.clone();
        for plan in &plans {
            let current = q.marginal(&plan.set)?;
            let mut probs = q.probs().to_vec();
            for (idx, cell) in probs.iter_mut().enumerate() {
                if *cell == 0.0 {
                    continue;
                }
                let asg = q_decode(&vars, idx);
                let mut sub = 0usize;
                for (k, &i) in plan.positions.iter().enumerate() {
                    sub += asg[i] as usize * plan.strides[k];
                }
                let have = current.probs()[sub];
                let want = plan.target.probs()[sub];
                *cell = if have == 0.0 { 0.0 } else { *cell * want / have };
            }
            q = FiniteDist::new_renormalized(vars.clone(), probs)?;
        }
        iterations += 1;
        if q.tv_distance(&before)? < tol {
            converged = true;
            break;
        }
    }

    let tv_distance = q.tv_distance(p)?;
    Ok(IpfFit {
        fitted: q,
        tv_distance,
        converged,
        iterations,
    })
}

fn q_decode(vars: &[(hedg_core::NodeId, usize)], mut idx: usize) -> Vec<u8> {
    let mut asg = vec![0u8; vars.len()];
    for i in (0..vars.len()).rev() {
        let card = vars[i].1;
        asg[i] = (idx % card) as u8;
        idx /= card;
    }
    asg
}
