use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{scan, Catalog, ConfigMatch, LocalStructure, Pattern, PatternParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{frac, int, ExactInt, Ratio};

/// One discharging rule: every `sender` passes `amount` to each neighbor
/// accepted by `receiver`.
#[derive(Clone, Copy)]
pub struct Rule {
    pub id: &'static str,
    pub amount: (i64, i64),
    pub description: &'static str,
    sender: fn(&LocalStructure, usize) -> bool,
    receiver: fn(&LocalStructure, usize) -> bool,
}

impl Rule {
    pub fn sends(&self, loc: &LocalStructure, v: usize) -> bool {
        (self.sender)(loc, v)
    }

    pub fn receives(&self, loc: &LocalStructure, v: usize) -> bool {
        (self.receiver)(loc, v)
    }

    pub fn amount<T: ExactInt>(&self) -> Ratio<T> {
        frac(self.amount.0, self.amount.1)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}/{}): {}", self.id, self.amount.0, self.amount.1, self.description)
    }
}

fn deg2(l: &LocalStructure, v: usize) -> bool {
    l.degree(v) == 2
}

fn three_plus(l: &LocalStructure, v: usize) -> bool {
    l.degree(v) >= 3
}

fn three_without_two(l: &LocalStructure, v: usize) -> bool {
    l.degree(v) == 3 && l.two_neighbors(v) == 0
}

fn is31(l: &LocalStructure, v: usize) -> bool {
    l.is_3_1(v)
}

fn is31_or_43(l: &LocalStructure, v: usize) -> bool {
    l.is_3_1(v) || l.is_4_3(v)
}

const S3_RULES: [Rule; 2] = [
    Rule { id: "R1", amount: (3, 7), description: "3+-vertex to each 2-neighbor", sender: three_plus, receiver: deg2 },
    Rule {
        id: "R2",
        amount: (1, 7),
        description: "3-vertex without 2-neighbor, or 4+-vertex, to each 3_1-neighbor",
        sender: |l, v| three_without_two(l, v) || l.degree(v) >= 4,
        receiver: is31,
    },
];

const S41_RULES: [Rule; 5] = [
    Rule { id: "R1", amount: (3, 11), description: "3-vertex in Z to each 2-neighbor", sender: |l, v| l.degree(v) == 3 && l.in_z(v), receiver: deg2 },
    Rule {
        id: "R2",
        amount: (4, 11),
        description: "3-vertex not in Z to each 2-neighbor",
        sender: |l, v| l.degree(v) == 3 && !l.in_z(v),
        receiver: deg2,
    },
    Rule { id: "R3", amount: (5, 11), description: "4+-vertex to each 2-neighbor", sender: |l, v| l.degree(v) >= 4, receiver: deg2 },
    Rule {
        id: "R4",
        amount: (1, 11),
        description: "4-vertex with at most two 2-neighbors to each 3_1- and 4_3-neighbor",
        sender: |l, v| l.degree(v) == 4 && l.two_neighbors(v) <= 2,
        receiver: is31_or_43,
    },
    Rule {
        id: "R5",
        amount: (1, 11),
        description: "5+-vertex, or 3-vertex without 2-neighbor, to each 3_1- and 4_3-neighbor",
        sender: |l, v| l.degree(v) >= 5 || three_without_two(l, v),
        receiver: is31_or_43,
    },
];

const S42_RULES: [Rule; 2] = [
    Rule { id: "R1", amount: (4, 11), description: "3+-vertex to each 2-neighbor", sender: three_plus, receiver: deg2 },
    Rule { id: "R2", amount: (1, 11), description: "3-vertex without 2-neighbors to each 3_1-neighbor", sender: three_without_two, receiver: is31 },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSet {
    S3,
    S41,
    S42,
}

impl RuleSet {
    pub const ALL: [RuleSet; 3] = [RuleSet::S3, RuleSet::S41, RuleSet::S42];

    pub fn id(self) -> &'static str {
        match self {
            RuleSet::S3 => "S3",
            RuleSet::S41 => "S4.1",
            RuleSet::S42 => "S4.2",
        }
    }

    pub fn rules(self) -> &'static [Rule] {
        match self {
            RuleSet::S3 => &S3_RULES,
            RuleSet::S41 => &S41_RULES,
            RuleSet::S42 => &S42_RULES,
        }
    }

    /// The per-vertex lower bound the rules are designed to reach.
    pub fn bound<T: ExactInt>(self) -> Ratio<T> {
        match self {
            RuleSet::S3 => frac(20, 7),
            RuleSet::S41 | RuleSet::S42 => frac(30, 11),
        }
    }

    pub fn catalog(self) -> Catalog {
        match self {
            RuleSet::S3 => Catalog::S3,
            RuleSet::S41 => Catalog::S41,
            RuleSet::S42 => Catalog::S42,
        }
    }

    /// Largest maximum degree for which configuration-free graphs are
    /// guaranteed to reach the bound. The S4.2 rules never pay a 4-vertex,
    /// so a `4_4`-vertex ends at 28/11.
    pub fn max_degree_scope(self) -> Option<usize> {
        match self {
            RuleSet::S42 => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for RuleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleSet::ALL
            .into_iter()
            .find(|r| r.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown rule set `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer<T: ExactInt> {
    pub from: usize,
    pub to: usize,
    pub amount: Ratio<T>,
    pub rule: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger<T: ExactInt> {
    pub rules: RuleSet,
    pub initial: Vec<Ratio<T>>,
    pub final_charge: Vec<Ratio<T>>,
    pub transfers: Vec<Transfer<T>>,
}

impl<T: ExactInt> ChargeLedger<T> {
    pub fn total_initial(&self) -> Ratio<T> {
        self.initial.iter().fold(int(0), |a, b| a + b.clone())
    }

    pub fn total_final(&self) -> Ratio<T> {
        self.final_charge.iter().fold(int(0), |a, b| a + b.clone())
    }

    /// Totals agree and every final charge equals initial minus outgoing
    /// plus incoming, recomputed from the transfer list.
    pub fn is_consistent(&self) -> bool {
        let mut expect = self.initial.clone();
        for t in &self.transfers {
            expect[t.from] = expect[t.from].clone() - t.amount.clone();
            expect[t.to] = expect[t.to].clone() + t.amount.clone();
        }
        expect == self.final_charge && self.total_initial() == self.total_final()
    }

    /// Smallest final charge and the first vertex attaining it.
    pub fn min_final(&self) -> Option<(usize, Ratio<T>)> {
        self.final_charge.iter().enumerate().fold(None, |best, (v, c)| match best {
            Some((_, ref b)) if b <= c => best,
            _ => Some((v, c.clone())),
        })
    }
}

/// Initial charge `deg(v)`; every rule is evaluated on the original degree
/// structure and all transfers are applied at once.
pub fn discharge<T: ExactInt>(g: &Graph, rules: RuleSet) -> ChargeLedger<T> {
    let loc = LocalStructure::new(g);
    let initial: Vec<Ratio<T>> = (0..g.n()).map(|v| int(g.degree(v) as i64)).collect();
    let mut final_charge = initial.clone();
    let mut transfers = Vec::new();
    for rule in rules.rules() {
        let amount: Ratio<T> = rule.amount();
        for u in (0..g.n()).filter(|&u| rule.sends(&loc, u)) {
            for &w in g.neighbors(u).iter().filter(|&&w| rule.receives(&loc, w)) {
                final_charge[u] = final_charge[u].clone() - amount.clone();
                final_charge[w] = final_charge[w].clone() + amount.clone();
                transfers.push(Transfer { from: u, to: w, amount: amount.clone(), rule: rule.id });
            }
        }
    }
    ChargeLedger { rules, initial, final_charge, transfers }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    /// Configuration-free and every final charge reaches the bound.
    Pass,
    /// Configuration-free but some vertex ends below the bound.
    RedFlag,
    /// Some pattern matched; no claim is made.
    NotConfigurationFree,
    /// Configuration-free, but outside the degree range of the rule set.
    OutOfScope,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport<T: ExactInt> {
    pub status: BoundStatus,
    pub bound: Ratio<T>,
    pub matches: Vec<ConfigMatch>,
    pub ledger: ChargeLedger<T>,
    pub min_final: Option<(usize, Ratio<T>)>,
    /// Vertices below the bound (reported whatever the status).
    pub below_bound: Vec<usize>,
}

/// Discharges `g` and, if no pattern of `patterns` occurs, checks that every
/// final charge is at least `bound`.
pub fn discharging_bound_check<T: ExactInt>(
    g: &Graph,
    rules: RuleSet,
    patterns: &[Pattern],
    params: &PatternParams,
    bound: Ratio<T>,
) -> Result<BoundReport<T>> {
    let matches = scan(g, patterns, params)?;
    let ledger = discharge::<T>(g, rules);
    let below_bound: Vec<usize> = (0..g.n()).filter(|&v| ledger.final_charge[v] < bound).collect();
    let status = if !matches.is_empty() {
        BoundStatus::NotConfigurationFree
    } else if rules.max_degree_scope().is_some_and(|d| g.max_degree() > d) {
        BoundStatus::OutOfScope
    } else if below_bound.is_empty() {
        BoundStatus::Pass
    } else {
        BoundStatus::RedFlag
    };
    Ok(BoundReport { status, bound, min_final: ledger.min_final(), matches, ledger, below_bound })
}
