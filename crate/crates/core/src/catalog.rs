//! Isomorphism-class representatives for small orders.
//!
//! Each supported order lists one spec per isomorphism class. Complete
//! orders list every class; their recipe count must equal the shipped group
//! count fixture. Partial orders list some classes only and are never used
//! where completeness matters.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::CatalogError;
use crate::group::FiniteGroup;
use crate::numbers::is_prime;
use crate::spec::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Completeness {
    Complete,
    Partial,
}

/// Largest order any catalog entry may have.
pub const MAX_CATALOG_ORDER: usize = 63;

const PAULI: &str = "P(8;(1 2)(3 4)(5 6)(7 8),(2 4)(6 8),(1 5 3 7)(2 6 4 8))";

/// Non-prime orders; prime orders are filled in with their cyclic group.
const COMPLETE: &[(usize, &[&str])] = &[
    (1, &["C1"]),
    (4, &["C4", "C2xC2"]),
    (6, &["C6", "D3"]),
    (8, &["C8", "C2xC4", "C2xC2xC2", "D4", "Q8"]),
    (9, &["C9", "C3xC3"]),
    (10, &["C10", "D5"]),
    (12, &["C12", "C2xC6", "D6", "Dic3", "E(2,2,[0,1;1,1],3)"]),
    (14, &["C14", "D7"]),
    (15, &["C15"]),
    (
        16,
        &[
            "C16",
            "C2xC8",
            "C4xC4",
            "C2xC2xC4",
            "C2xC2xC2xC2",
            "D8",
            "Q16",
            "SD16",
            "M(8,2,5)",
            "C2xD4",
            "C2xQ8",
            "M(4,4,3)",
            "E(2,2,[0,1;1,0],4)",
            PAULI,
        ],
    ),
    (18, &["C18", "C3xC6", "D9", "C3xD3", "E(3,2,[2,0;0,2],2)"]),
    (20, &["C20", "C2xC10", "D10", "Dic5", "M(5,4,2)"]),
    (21, &["C21", "M(7,3,2)"]),
    (22, &["C22", "D11"]),
    (25, &["C25", "C5xC5"]),
    (26, &["C26", "D13"]),
    (27, &["C27", "C3xC9", "C3xC3xC3", "M(9,3,4)", "E(3,2,[1,1;0,1],3)"]),
    (28, &["C28", "C2xC14", "D14", "Dic7"]),
    (30, &["C30", "D15", "C5xD3", "C3xD5"]),
    (33, &["C33"]),
    (34, &["C34", "D17"]),
    (35, &["C35"]),
    (38, &["C38", "D19"]),
    (39, &["C39", "M(13,3,3)"]),
    (42, &["C42", "D21", "C7xD3", "C3xD7", "C2xM(7,3,2)", "M(7,6,3)"]),
    (44, &["C44", "C2xC22", "D22", "Dic11"]),
    (45, &["C45", "C3xC15"]),
    (46, &["C46", "D23"]),
    (49, &["C49", "C7xC7"]),
    (50, &["C50", "C5xC10", "D25", "C5xD5", "E(5,2,[4,0;0,4],2)"]),
    (51, &["C51"]),
    (52, &["C52", "C2xC26", "D26", "Dic13", "M(13,4,5)"]),
    (55, &["C55", "M(11,5,3)"]),
    (57, &["C57", "M(19,3,7)"]),
    (58, &["C58", "D29"]),
    (62, &["C62", "D31"]),
    (63, &["C63", "C3xC21", "M(7,9,2)", "C3xM(7,3,2)"]),
];

const PARTIAL: &[(usize, &[&str])] = &[(
    24,
    &[
        "C24",
        "C2xC12",
        "C2xC2xC6",
        "D12",
        "Dic6",
        "C4xD3",
        "C2xDic3",
        "C2xC2xD3",
        "C3xD4",
        "C3xQ8",
        "M(3,8,2)",
        "C2xE(2,2,[0,1;1,1],3)",
        "P(4;(1 2),(1 2 3 4))",
    ],
)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub order: usize,
    pub recipes: Vec<GroupSpec>,
    pub completeness: Completeness,
    /// Known number of groups of this order, when the fixture lists it.
    pub fixture_count: Option<usize>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Vec<FiniteGroup>, CatalogError> {
        self.recipes
            .iter()
            .map(|r| r.build().map_err(CatalogError::from))
            .collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
struct FixtureRow {
    n: usize,
    count: usize,
    source: String,
}

/// Known group counts: order ↦ (count, source note).
pub fn fixture_counts() -> &'static BTreeMap<usize, (usize, String)> {
    static COUNTS: OnceLock<BTreeMap<usize, (usize, String)>> = OnceLock::new();
    COUNTS.get_or_init(|| {
        csv::Reader::from_reader(include_str!("../data/group_counts.csv").as_bytes())
            .deserialize::<FixtureRow>()
            .map(|row| {
                let row = row.expect("shipped fixture parses");
                (row.n, (row.count, row.source))
            })
            .collect()
    })
}

fn recipe_table() -> &'static BTreeMap<usize, (Completeness, Vec<GroupSpec>)> {
    static TABLE: OnceLock<BTreeMap<usize, (Completeness, Vec<GroupSpec>)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let parse = |texts: &[&str]| -> Vec<GroupSpec> {
            texts
                .iter()
                .map(|t| GroupSpec::parse(t).unwrap_or_else(|e| panic!("recipe {t}: {e}")))
                .collect()
        };
        let mut table: BTreeMap<_, _> = (2..=MAX_CATALOG_ORDER)
            .filter(|&p| is_prime(p as u64))
            .map(|p| (p, (Completeness::Complete, vec![GroupSpec::Cyclic(p)])))
            .collect();
        for (n, texts) in COMPLETE {
            table.insert(*n, (Completeness::Complete, parse(texts)));
        }
        for (n, texts) in PARTIAL {
            table.insert(*n, (Completeness::Partial, parse(texts)));
        }
        table
    })
}

fn supported_list() -> String {
    supported_orders()
        .iter()
        .map(|(n, c)| match c {
            Completeness::Complete => n.to_string(),
            Completeness::Partial => format!("{n} (partial)"),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn supported_orders() -> Vec<(usize, Completeness)> {
    recipe_table().iter().map(|(&n, (c, _))| (n, *c)).collect()
}

pub fn complete_orders() -> Vec<usize> {
    supported_orders()
        .into_iter()
        .filter(|(_, c)| *c == Completeness::Complete)
        .map(|(n, _)| n)
        .collect()
}

pub fn entry(n: usize) -> Result<CatalogEntry, CatalogError> {
    let (completeness, recipes) = recipe_table()
        .get(&n)
        .ok_or_else(|| CatalogError::UnsupportedOrder {
            order: n,
            supported: supported_list(),
        })?;
    Ok(CatalogEntry {
        order: n,
        recipes: recipes.clone(),
        completeness: *completeness,
        fixture_count: fixture_counts().get(&n).map(|(c, _)| *c),
    })
}

/// The catalog groups of order `n`, cyclic first, with the entry's completeness.
pub fn groups_of_order(n: usize) -> Result<(Vec<FiniteGroup>, Completeness), CatalogError> {
    let entry = entry(n)?;
    Ok((entry.build()?, entry.completeness))
}

/// Every catalog group, in order of increasing order then recipe.
pub fn all_groups() -> Result<Vec<FiniteGroup>, CatalogError> {
    let mut out = Vec::new();
    for (n, _) in supported_orders() {
        out.extend(groups_of_order(n)?.0);
    }
    Ok(out)
}

/// The recipe of the catalog class containing `g`; `g`'s order must be complete.
pub fn find_iso_class(g: &FiniteGroup) -> Result<GroupSpec, CatalogError> {
    let entry = entry(g.order())?;
    if entry.completeness != Completeness::Complete {
        return Err(CatalogError::Incomplete(g.order()));
    }
    for recipe in &entry.recipes {
        if recipe.build()?.is_isomorphic(g) {
            return Ok(recipe.clone());
        }
    }
    Err(CatalogError::Inconsistent(format!(
        "no recipe of order {} is isomorphic to {}",
        g.order(),
        g.label()
    )))
}
