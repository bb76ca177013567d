use serde::{Deserialize, Serialize};

use crate::constructors::{alternating, build, cyclic, direct_product};
use crate::counting::census;
use crate::error::Result;
use crate::matrix_groups::{involution_count_formula, psl2, sl2};
use crate::structure::is_supersolvable;
use crate::subgroup::centralizer;
use crate::GroupSpec;

/// A pinned value: exact or a closed window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Exact(u64),
    Window(u64, u64),
}

impl Target {
    pub fn accepts(&self, v: u64) -> bool {
        match *self {
            Target::Exact(t) => v == t,
            Target::Window(lo, hi) => (lo..=hi).contains(&v),
        }
    }
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Target::Exact(t) => write!(f, "{t}"),
            Target::Window(lo, hi) => write!(f, "[{lo},{hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub group: String,
    pub quantity: String,
    pub target: Target,
    pub computed: u64,
    pub matches: bool,
}

fn row(group: &str, quantity: &str, target: Target, computed: u64) -> GoldenRow {
    GoldenRow {
        group: group.to_string(),
        quantity: quantity.to_string(),
        target,
        computed,
        matches: target.accepts(computed),
    }
}

fn c_of(spec: &str) -> Result<u64> {
    let spec: GroupSpec =
        spec.parse().map_err(
            |e: crate::constructors::SpecParseError| crate::Error::Parse {
                line: 1,
                column: e.offset + 1,
                message: e.message,
            },
        )?;
    Ok(census(&build(&spec)?).total as u64)
}

/// Recomputes the reference values the classification rests on.
pub fn golden_table() -> Result<Vec<GoldenRow>> {
    use Target::*;
    let mut rows = vec![
        row("A5", "c", Exact(32), c_of("alternating 5")?),
        row("PSL(2,4)", "c", Exact(32), census(&psl2(4)?).total as u64),
        row("SL(2,5)", "c", Exact(49), census(&sl2(5)?).total as u64),
        row("PSL(2,7)", "c", Exact(79), census(&psl2(7)?).total as u64),
        row("PSL(2,9)", "c", Exact(167), census(&psl2(9)?).total as u64),
        row(
            "A5 x Z7",
            "c",
            Exact(64),
            c_of("direct_product [alternating 5] [cyclic 7]")?,
        ),
        row(
            "Z5 x A4 x Z7",
            "c",
            Exact(32),
            c_of("direct_product [cyclic 5] [alternating 4] [cyclic 7]")?,
        ),
        row("(Z2)^4", "c", Exact(16), c_of("elementary_abelian 2 4")?),
        row("(Z3)^2", "c", Exact(5), c_of("elementary_abelian 3 2")?),
        row("A4", "c", Window(1, 12), c_of("alternating 4")?),
        row("SmallGroup(36,3)", "c", Window(1, 12), c_of("named 36 3")?),
        row("SL(2,3)", "c", Window(13, 17), c_of("sl2 3")?),
        row("S4", "c", Window(13, 17), c_of("symmetric 4")?),
        row(
            "SmallGroup(56,11)",
            "c",
            Window(13, 17),
            c_of("named 56 11")?,
        ),
        row(
            "SmallGroup(108,3)",
            "c",
            Window(13, 17),
            c_of("named 108 3")?,
        ),
    ];
    for q in [4u64, 8] {
        let g = psl2(q)?;
        let enumerated = census(&g).involutions as u64;
        rows.push(row(
            &format!("PSL(2,{q})"),
            "involutions",
            Exact(involution_count_formula(q)),
            enumerated,
        ));
        let s = sl2(q)?;
        let involution = (0..s.order())
            .find(|&x| s.element_order(x) == 2)
            .expect("even q has involutions");
        rows.push(row(
            &format!("SL(2,{q})"),
            "|C(involution)|",
            Exact(q),
            centralizer(&s, involution).size() as u64,
        ));
    }
    let z5a4 = direct_product(&cyclic(5)?, &alternating(4)?)?;
    rows.push(row(
        "Z5 x A4",
        "supersolvable",
        Exact(0),
        u64::from(is_supersolvable(&z5a4)),
    ));
    Ok(rows)
}

pub fn render_table(rows: &[GoldenRow]) -> String {
    let mut out = format!(
        "{:<20} {:<16} {:>10} {:>9}  {}\n",
        "group", "quantity", "target", "computed", "ok"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<20} {:<16} {:>10} {:>9}  {}\n",
            r.group,
            r.quantity,
            r.target.to_string(),
            r.computed,
            if r.matches { "yes" } else { "NO" }
        ));
    }
    out
}
