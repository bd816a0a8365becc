use rayon::prelude::*;

use super::Witness;
use crate::error::Result;
use crate::traverse::Structure;
use crate::value::Value;

/// Every filling of every skeleton with payloads drawn from `pool`, in
/// odometer order (last position fastest). Stops at `cap`; the flag reports
/// whether anything was cut off.
pub(crate) fn fill_all(skeletons: &[Structure], pool: &[Value], cap: usize) -> (Vec<Structure>, bool) {
    let mut out = Vec::new();
    for skel in skeletons {
        let n = skel.positions();
        if n > 0 && pool.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; n];
        loop {
            if out.len() >= cap {
                return (out, true);
            }
            let payloads = idx.iter().map(|&i| pool[i].clone()).collect();
            out.push(skel.fill(payloads).expect("skeleton arity"));
            // advance the odometer
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < pool.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    (out, false)
}

/// Labels positions `#0 .. #n-1` in structural order.
pub(crate) fn label_positions(skeleton: &Structure) -> Structure {
    let labels = (0..skeleton.positions() as u32).map(Value::Token).collect();
    skeleton.fill(labels).expect("label count matches")
}

/// Evaluates cases in parallel; returns the number of cases considered and
/// the first failure by generation index.
pub(crate) fn first_failure<C, F>(cases: &[C], eval: F) -> Result<(usize, Option<Witness>)>
where
    C: Sync,
    F: Fn(&C) -> Result<Option<Witness>> + Sync,
{
    let found = cases
        .par_iter()
        .enumerate()
        .map(|(i, c)| (i, eval(c)))
        .find_map_first(|(i, r)| match r {
            Ok(None) => None,
            other => Some((i, other)),
        });
    match found {
        None => Ok((cases.len(), None)),
        Some((i, r)) => Ok((i + 1, r?)),
    }
}
