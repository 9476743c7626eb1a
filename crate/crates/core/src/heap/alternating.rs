use crate::coxeter::{CoxeterSystem, Family, Word};
use crate::error::{Error, Result};

/// Relabeling that merges fork leaves into one virtual end generator, plus
/// the fork pairs that must alternate among themselves.
struct ForkView {
    relabel: Vec<u8>,
    edges: Vec<(u8, u8)>,
    forks: Vec<(u8, u8)>,
}

fn fork_view(sys: &CoxeterSystem) -> Result<ForkView> {
    let n = sys.rank();
    let identity: Vec<u8> = (0..n as u8).collect();
    let family = sys.family();
    match family {
        Family::A | Family::Linear | Family::B | Family::Ctilde | Family::Atilde => Ok(ForkView {
            relabel: identity,
            edges: sys.edges(),
            forks: Vec::new(),
        }),
        Family::D | Family::Btilde | Family::Dtilde => {
            // generators: t1 t2 s1 … [u | u1 u2]; t1,t2 ↦ t1 and u1,u2 ↦ u1
            let mut relabel = identity;
            relabel[1] = 0;
            let mut forks = vec![(0, 1)];
            if family == Family::Dtilde {
                relabel[n - 1] = (n - 2) as u8;
                forks.push(((n - 2) as u8, (n - 1) as u8));
            }
            let mut edges: Vec<(u8, u8)> = sys
                .edges()
                .into_iter()
                .map(|(a, b)| {
                    let (x, y) = (relabel[a as usize], relabel[b as usize]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            edges.dedup();
            Ok(ForkView {
                relabel,
                edges,
                forks,
            })
        }
        _ => Err(Error::Precondition(format!(
            "alternation is defined for linear, cyclic and forked diagrams, not {}",
            sys.label()
        ))),
    }
}

fn interleaves(letters: &[u8], x: u8, y: u8) -> bool {
    let mut prev = None;
    for &c in letters {
        if c == x || c == y {
            if prev == Some(c) {
                return false;
            }
            prev = Some(c);
        }
    }
    true
}

/// Whether the occurrences of every pair of adjacent generators strictly
/// interleave. Fork leaves (`t1, t2` and `u1, u2`) count as one generator for
/// their edge and must also alternate with each other.
pub fn is_alternating(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    let view = fork_view(sys)?;
    let relabeled: Vec<u8> = w
        .letters()
        .iter()
        .map(|&s| view.relabel[s as usize])
        .collect();
    Ok(view
        .edges
        .iter()
        .all(|&(x, y)| interleaves(&relabeled, x, y))
        && view
            .forks
            .iter()
            .all(|&(x, y)| interleaves(w.letters(), x, y)))
}
