//! The linear relation system satisfied by the coefficient table.
//!
//! Eleven groups of identities in `Q(m)[β]` pin the table down: vanishing
//! statements for skew-Hermitian and gauge-trivial invariants, shift and
//! conformal-variation constraints, and the closed forms fixed by the ball
//! computation. Every residual is checked as an exact zero.

use super::table::CoefficientTable;
use crate::exact::{CoeffExpr, Rational, RationalFunction};

pub struct Relation {
    pub label: String,
    pub residual: CoeffExpr,
}

pub struct RelationGroup {
    pub id: &'static str,
    pub relations: Vec<Relation>,
}

pub struct RelationResult {
    pub group: &'static str,
    pub label: String,
    pub residual: String,
    pub pass: bool,
}

pub struct RelationReport {
    pub results: Vec<RelationResult>,
}

fn c(n: i64, d: i64) -> CoeffExpr {
    CoeffExpr::constant(Rational::new(n, d))
}

fn p(coeffs: &[i64]) -> CoeffExpr {
    CoeffExpr::from_rf(RationalFunction::from_ints(coeffs, &[1]))
}

fn pq(num: &[i64], den: &[i64]) -> CoeffExpr {
    CoeffExpr::from_rf(RationalFunction::from_ints(num, den))
}

/// The full relation system for a given table.
pub fn relation_system(t: &CoefficientTable) -> Vec<RelationGroup> {
    let b = CoeffExpr::beta();
    let one = CoeffExpr::one();
    let d = &t.d;
    let e = &t.e;
    let mut groups = Vec::new();

    // (1) skew-Hermitian invariants carry zero weight
    groups.push(RelationGroup {
        id: "1",
        relations: [1usize, 4, 7, 8, 11, 19]
            .iter()
            .map(|&i| Relation {
                label: format!("d{i}"),
                residual: d[i].clone(),
            })
            .chain([2usize, 5, 7].iter().map(|&j| Relation {
                label: format!("e{j}"),
                residual: e[j].clone(),
            }))
            .collect(),
    });

    // (2) constant shift of Θ leaves the coefficient unchanged
    groups.push(RelationGroup {
        id: "2",
        relations: vec![
            Relation {
                label: "2a: e3".into(),
                residual: e[3].clone(),
            },
            Relation {
                label: "2a: e8".into(),
                residual: e[8].clone(),
            },
            Relation {
                label: "2b: e0 - (m-1)e1".into(),
                residual: &e[0] - &(&p(&[-1, 1]) * &e[1]),
            },
            Relation {
                label: "2c: e4 - (m-1)e6".into(),
                residual: &e[4] - &(&p(&[-1, 1]) * &e[6]),
            },
        ],
    });

    // (3) the curvature-twist invariants are trace-free
    groups.push(RelationGroup {
        id: "3",
        relations: vec![
            Relation {
                label: "d14".into(),
                residual: d[14].clone(),
            },
            Relation {
                label: "d15".into(),
                residual: d[15].clone(),
            },
        ],
    });

    // (4) index symmetry of the ψ-linear terms
    groups.push(RelationGroup {
        id: "4",
        relations: vec![
            Relation {
                label: "d6".into(),
                residual: d[6].clone(),
            },
            Relation {
                label: "d10".into(),
                residual: d[10].clone(),
            },
        ],
    });

    // (5) conformal variation in the normal direction
    groups.push(RelationGroup {
        id: "5",
        relations: vec![
            Relation {
                label: "5a: d18".into(),
                residual: d[18].clone(),
            },
            Relation {
                label: "5b".into(),
                residual: &(&(&(&(&p(&[-2, 2]) * &d[12]) + &d[13]) - &(&c(2, 1) * &d[16]))
                    + &(&p(&[2, -2]) * &d[17]))
                    + &(&p(&[3, -1]) * &d[20]),
            },
            Relation {
                label: "5c".into(),
                residual: &(&(&p(&[2, -2]) * &d[12]) + &(&p(&[1, -1]) * &d[13]))
                    + &(&p(&[3, -1]) * &d[21]),
            },
        ],
    });

    // (6) connection gauge freedom
    groups.push(RelationGroup {
        id: "6",
        relations: vec![
            Relation {
                label: "6a".into(),
                residual: &(&(&c(2, 1) * &d[0]) + &d[2])
                    + &(&p(&[-3, 1]) * &(&(&c(2, 1) * &d[3]) + &d[5])),
            },
            Relation {
                label: "6b".into(),
                residual: &(&(&c(-2, 1) * &d[0]) + &d[2])
                    + &(&p(&[-1, 1]) * &(&(&c(2, 1) * &d[3]) - &d[5])),
            },
            Relation {
                label: "6c: e4 + (m-3)e6".into(),
                residual: &e[4] + &(&p(&[-3, 1]) * &e[6]),
            },
            Relation {
                label: "6d: d9".into(),
                residual: d[9].clone(),
            },
        ],
    });

    // (7) second variation of a constant shift of the operator
    groups.push(RelationGroup {
        id: "7",
        relations: vec![Relation {
            label: "7".into(),
            residual: &(&(&(&c(-2, 1) * &d[0]) + &d[2])
                - &(&p(&[-1, 1]) * &(&(&c(2, 1) * &d[3]) - &d[5])))
                - &(&(&p(&[-2, 1]) * &c(1, 4)) * &(&b - &one)),
        }],
    });

    // (8) imaginary constant shift with compensating Θ
    groups.push(RelationGroup {
        id: "8",
        relations: vec![Relation {
            label: "8".into(),
            residual: {
                let mut acc = &(&c(1, 4) * &(&b - &one)) + &(&(&c(2, 1) * &d[0]) + &d[2]);
                acc = &acc + &(&p(&[-2, 2]) * &d[3]);
                acc = &acc + &(&p(&[-1, 1]) * &d[5]);
                acc = &acc + &(&e[0] + &(&p(&[-1, 1]) * &e[1]));
                acc = &acc - &(&c(2, 1) * &e[4]);
                &acc - &(&(&c(2, 1) * &p(&[-1, 1])) * &e[6])
            },
        }],
    });

    // (9) cylindrical reduction to the tangential operator
    let signature = &(&(&p(&[-1, 1]) * &pq(&[1], &[-2, 1])) * &b) - &one; // (m-1)/(m-2)β − 1
    groups.push(RelationGroup {
        id: "9",
        relations: vec![
            Relation {
                label: "9a".into(),
                residual: &(&(&c(2, 1) * &d[0]) + &d[2])
                    - &(&(&p(&[-3, 1]) * &c(1, 8)) * &signature),
            },
            Relation {
                label: "9b".into(),
                residual: &(&(&c(2, 1) * &d[3]) + &d[5]) + &(&c(1, 8) * &signature),
            },
            Relation {
                label: "9c".into(),
                residual: &d[12] + &(&c(1, 48) * &signature),
            },
        ],
    });

    // (10) ball spectrum closed forms
    groups.push(RelationGroup {
        id: "10",
        relations: vec![
            Relation {
                label: "10a".into(),
                residual: &(&(&d[16] + &(&p(&[-1, 1]) * &d[17])) - &pq(&[17, -7], &[384]))
                    - &(&pq(&[-11, 4], &[48]) * &b),
            },
            Relation {
                label: "10b".into(),
                residual: &d[20]
                    - &(&pq(&[1], &[-24, 8])
                        * &(&pq(&[-7, 5], &[8]) - &(&pq(&[-9, 5], &[3]) * &b))),
            },
            Relation {
                label: "10c".into(),
                residual: &d[21] - &(&pq(&[-1, 1], &[-48, 16]) * &(&(&c(2, 1) * &b) - &one)),
            },
        ],
    });

    // (11) tangential-trace combination from the product geometry
    groups.push(RelationGroup {
        id: "11",
        relations: vec![Relation {
            label: "11".into(),
            residual: &(&d[16] + &d[17])
                - &(&pq(&[1], &[-16, 0, 16]) * &(&pq(&[-17, 8, 1], &[8]) - &(&p(&[-4, 3]) * &b))),
        }],
    });

    groups
}

/// Evaluate every relation of every group; all residuals must be the exact
/// zero of `Q(m)[β]`.
pub fn verify_relations(t: &CoefficientTable) -> RelationReport {
    let mut results = Vec::new();
    for g in relation_system(t) {
        for r in g.relations {
            results.push(RelationResult {
                group: g.id,
                label: r.label,
                residual: r.residual.display(),
                pass: r.residual.is_zero(),
            });
        }
    }
    RelationReport { results }
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    /// One line per relation: id, symbolic residual, pass/fail.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!(
                "({}) {:<28} residual = {:<12} {}\n",
                r.group,
                r.label,
                r.residual,
                if r.pass { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::table::coefficient_table;
    use std::time::Instant;

    #[test]
    fn all_groups_pass() {
        let start = Instant::now();
        let report = verify_relations(coefficient_table());
        assert!(report.all_pass(), "\n{}", report.render());
        // the whole suite is an exact-arithmetic computation; keep it fast
        assert!(start.elapsed().as_secs() < 1, "relation suite too slow");
        // eleven groups
        let mut groups: Vec<_> = report.results.iter().map(|r| r.group).collect();
        groups.dedup();
        assert_eq!(groups.len(), 11);
    }

    #[test]
    fn tampered_table_fails_locally() {
        let t = CoefficientTable::tampered(12);
        let report = verify_relations(&t);
        assert!(!report.all_pass());
        // groups 5 and 9 involve d12; group 11 does not
        assert!(report.results.iter().any(|r| r.group == "9" && !r.pass));
        assert!(report
            .results
            .iter()
            .filter(|r| r.group == "11")
            .all(|r| r.pass));
    }

    #[test]
    fn every_entry_is_pinned_by_some_relation() {
        // tampering any of the 31 table entries must break at least one
        // relation: the system determines the full table, zero entries
        // included
        for i in 0..31 {
            let report = verify_relations(&CoefficientTable::tampered(i));
            assert!(!report.all_pass(), "tampering entry {i} went undetected");
        }
    }

    #[test]
    fn residuals_render_as_zero_on_pass() {
        let report = verify_relations(coefficient_table());
        for r in &report.results {
            assert_eq!(r.residual, "0", "({}) {}", r.group, r.label);
        }
    }
}
