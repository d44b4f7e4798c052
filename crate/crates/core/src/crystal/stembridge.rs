//! Local conditions satisfied by simply-laced crystals, checked vertex by vertex.

use std::fmt;

use crate::crystal::graph::CrystalGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub vertex: String,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {} for (i, j) = ({}, {})", self.rule, self.vertex, self.i, self.j)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StembridgeReport {
    /// Number of (vertex, i, j, rule) instances whose hypotheses held.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl StembridgeReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Operators and statistics in one direction: raising with epsilon, or lowering with phi.
struct View<'a, E> {
    g: &'a CrystalGraph<E>,
    up: bool,
}

impl<E: Clone + Ord + fmt::Display> View<'_, E> {
    fn op(&self, v: usize, i: usize) -> Option<usize> {
        if self.up {
            self.g.e(v, i)
        } else {
            self.g.f(v, i)
        }
    }

    fn near(&self, v: usize, i: usize) -> usize {
        if self.up {
            self.g.epsilon(v, i)
        } else {
            self.g.phi(v, i)
        }
    }

    fn far(&self, v: usize, i: usize) -> usize {
        if self.up {
            self.g.phi(v, i)
        } else {
            self.g.epsilon(v, i)
        }
    }
}

/// Checks the dichotomy, commutation and string-length rules, together with their
/// lowering duals, for every pair of distinct indices of the graph that are at least 1.
pub fn stembridge_check<E: Clone + Ord + fmt::Display>(g: &CrystalGraph<E>) -> StembridgeReport {
    let idx: Vec<usize> = g.indices().iter().copied().filter(|&i| i >= 1).collect();
    let mut report = StembridgeReport::default();
    for up in [true, false] {
        let view = View { g, up };
        let suffix = if up { "" } else { " (dual)" };
        for v in 0..g.len() {
            for &i in &idx {
                for &j in &idx {
                    if i != j {
                        check_pair(&view, v, i, j, suffix, &mut report);
                    }
                }
            }
        }
    }
    report
}

fn check_pair<E: Clone + Ord + fmt::Display>(
    view: &View<'_, E>,
    x: usize,
    i: usize,
    j: usize,
    suffix: &str,
    report: &mut StembridgeReport,
) {
    let adjacent = i.abs_diff(j) == 1;
    let fail = |rule: &'static str, report: &mut StembridgeReport| {
        report.violations.push(Violation {
            rule,
            vertex: format!("{}{suffix}", view.g.label(x)),
            i,
            j,
        });
    };

    if let Some(y) = view.op(x, i) {
        let (ne, nf) = (view.near(x, j), view.far(x, j));
        let (ye, yf) = (view.near(y, j), view.far(y, j));

        report.checked += 1;
        if adjacent {
            let first = ye == ne && yf + 1 == nf;
            let second = ye == ne + 1 && yf == nf;
            if first == second {
                fail("dichotomy", report);
            }
        } else if ye != ne || yf != nf {
            fail("distant indices leave strings unchanged", report);
        }

        if ne > 0 && ye == ne {
            report.checked += 1;
            let ij = view.op(x, j).and_then(|z| view.op(z, i));
            let ji = view.op(y, j);
            if ij.is_none() || ij != ji {
                fail("commutation", report);
            }
            if let Some(z) = view.op(x, j) {
                if view.far(z, i) != view.far(x, i) {
                    fail("commutation keeps the opposite string", report);
                }
                if adjacent && view.near(z, i) != view.near(x, i) + 1 {
                    fail("commutation lengthens the string", report);
                }
            }
        }
    }

    if adjacent {
        if let Some(y) = view.op(x, j) {
            if view.near(y, i) == view.near(x, i) + 1 {
                report.checked += 1;
                let z = view.op(y, i).expect("string of positive length");
                if view.near(z, j) + 1 != view.near(x, j) {
                    fail("string shortening", report);
                }
            }
        }
    }
}
