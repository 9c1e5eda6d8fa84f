//! Instance corpora derived from a scale.

use crate::graph::{enumerate_labeled_graphs, FamilySpec, Graph};

use super::{Instance, VerifyError};

/// Largest accepted `max_n`.
pub const MAX_SCALE: usize = 12;
/// Largest labelled corpus order (`2^15` graphs at `n = 6`).
pub const LABELED_CAP: usize = 6;

const DEFAULT_LABELED: usize = 5;
const CORONA_FACTOR: usize = 3;
const JOIN_FACTOR: usize = 4;

/// How far each corpus reaches.
///
/// Family claims use every member with at most `max_n` vertices. Labelled
/// claims use all graphs on `1..=labeled_max_n` vertices. Corona and join
/// claims combine labelled factors of at most 3 and 4 vertices, each also
/// bounded by `max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scale {
    pub max_n: usize,
    pub labeled_max_n: usize,
}

impl Scale {
    /// Labelled corpus capped at 5 vertices.
    pub fn new(max_n: usize) -> Result<Self, VerifyError> {
        let s = Scale {
            max_n,
            labeled_max_n: max_n.min(DEFAULT_LABELED),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn with_labeled(max_n: usize, labeled_max_n: usize) -> Result<Self, VerifyError> {
        let s = Scale {
            max_n,
            labeled_max_n: labeled_max_n.min(max_n),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.max_n > MAX_SCALE {
            return Err(VerifyError::ScaleOverCap {
                what: "max_n",
                value: self.max_n,
                cap: MAX_SCALE,
            });
        }
        if self.labeled_max_n > LABELED_CAP {
            return Err(VerifyError::ScaleOverCap {
                what: "labeled_max_n",
                value: self.labeled_max_n,
                cap: LABELED_CAP,
            });
        }
        Ok(())
    }

    pub(crate) fn corona_factor(&self) -> usize {
        self.max_n.min(CORONA_FACTOR)
    }

    pub(crate) fn join_factor(&self) -> usize {
        self.max_n.min(JOIN_FACTOR)
    }
}

pub(crate) fn labeled_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_labeled_graphs(n).expect("within the enumeration cap"))
        .collect()
}

pub(crate) fn labeled(scale: &Scale) -> Vec<Instance> {
    labeled_upto(scale.labeled_max_n)
        .into_iter()
        .map(Instance::Graph)
        .collect()
}

pub(crate) fn coronas(scale: &Scale) -> Vec<Instance> {
    pairs(scale.corona_factor(), Instance::Corona)
}

pub(crate) fn joins(scale: &Scale) -> Vec<Instance> {
    pairs(scale.join_factor(), Instance::Join)
}

fn pairs(max_n: usize, make: fn(Graph, Graph) -> Instance) -> Vec<Instance> {
    let factors = labeled_upto(max_n);
    let mut out = Vec::with_capacity(factors.len() * factors.len());
    for g in &factors {
        for h in &factors {
            out.push(make(g.clone(), h.clone()));
        }
    }
    out
}

/// Members of a family whose order fits the scale.
pub(crate) fn family<I>(scale: &Scale, specs: I) -> Vec<Instance>
where
    I: IntoIterator<Item = FamilySpec>,
{
    specs
        .into_iter()
        .filter(|s| s.validate().is_ok() && s.order() <= scale.max_n)
        .map(Instance::Family)
        .collect()
}

/// Ascending part sizes with at least two parts and total at most `max_n`.
pub(crate) fn partitions(max_n: usize) -> Vec<Vec<usize>> {
    fn rec(min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for a in min..=left {
            cur.push(a);
            rec(a, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max_n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then(a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_caps() {
        assert!(Scale::new(MAX_SCALE).is_ok());
        assert!(matches!(
            Scale::new(MAX_SCALE + 1),
            Err(VerifyError::ScaleOverCap { what: "max_n", .. })
        ));
        assert!(Scale::with_labeled(8, 7).is_err());
        assert_eq!(Scale::new(3).unwrap().labeled_max_n, 3);
        assert_eq!(Scale::new(10).unwrap().labeled_max_n, 5);
    }

    #[test]
    fn corpus_sizes() {
        let s = Scale::new(4).unwrap();
        assert_eq!(labeled(&s).len(), 1 + 2 + 8 + 64);
        assert_eq!(coronas(&s).len(), 11 * 11);
        assert_eq!(joins(&s).len(), 75 * 75);
    }

    #[test]
    fn partitions_of_four() {
        assert_eq!(
            partitions(4),
            vec![
                vec![1, 1],
                vec![1, 1, 1],
                vec![1, 2],
                vec![1, 1, 1, 1],
                vec![1, 1, 2],
                vec![1, 3],
                vec![2, 2]
            ]
        );
    }
}
