//! Fixture tables shipped with the crate: the Kleinian types, the printed
//! spectra and invariant triples. The file formats are described in the README.

use std::sync::OnceLock;

use crate::ade::{AdeType, Family};
use crate::arith::rational::{self, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const TABLE1_TSV: &str = include_str!("../fixtures/table1.tsv");
pub const TABLE2_TSV: &str = include_str!("../fixtures/table2.tsv");
pub const INVARIANTS_TSV: &str = include_str!("../fixtures/invariants.tsv");

/// `slope * n + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::usage(format!("bad rank expression '{text}'"));
        if s.is_empty() {
            return Err(bad());
        }
        let (mut slope, mut offset) = (0i64, 0i64);
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == s.len() => (1, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if let Some(coeff) = term.strip_suffix('n') {
                let c = if coeff.is_empty() { 1 } else { coeff.parse().map_err(|_| bad())? };
                slope += sign * c;
            } else {
                offset += sign * term.parse::<i64>().map_err(|_| bad())?;
            }
        }
        Ok(Affine { slope, offset })
    }

    pub fn eval(&self, n: u32) -> i64 {
        self.slope * n as i64 + self.offset
    }
}

/// Replaces every `{expr}` by the value of the affine expression at `n`.
pub fn expand_template(template: &str, n: u32) -> Result<String> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| Error::usage(format!("unbalanced brace in '{template}'")))?;
        out.push_str(&Affine::parse(&rest[open + 1..open + close])?.eval(n).to_string());
        rest = &rest[open + close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

fn family_of(name: &str) -> Result<Family> {
    match name {
        "A" => Ok(Family::A),
        "D" => Ok(Family::D),
        "E6" => Ok(Family::E6),
        "E7" => Ok(Family::E7),
        "E8" => Ok(Family::E8),
        _ => Err(Error::usage(format!("unknown family '{name}'"))),
    }
}

/// Data rows split on tabs, skipping comments, blank lines and the header.
fn rows(text: &str, columns: usize) -> Result<Vec<Vec<&str>>> {
    let mut out = Vec::new();
    let mut header = true;
    for (lineno, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        if fields.len() != columns {
            return Err(Error::usage(format!(
                "fixture line {}: expected {columns} fields, found {}",
                lineno + 1,
                fields.len()
            )));
        }
        if std::mem::take(&mut header) {
            continue;
        }
        out.push(fields);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub family: Family,
    pub name: String,
    pub group: String,
    pub order: Affine,
    pub equation: String,
}

impl Table1Row {
    pub fn order_at(&self, rank: u32) -> u64 {
        self.order.eval(rank) as u64
    }

    pub fn equation_at(&self, rank: u32) -> Result<Polynomial> {
        Polynomial::parse(&expand_template(&self.equation, rank)?)
    }
}

/// A printed entry suspected to be a misprint, with the derived value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub printed: String,
    pub derived: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Row {
    pub ade: AdeType,
    /// Entries exactly as printed.
    pub printed: Vec<String>,
    pub erratum: Option<Erratum>,
}

impl Table2Row {
    /// Printed entries as rationals, ascending.
    pub fn printed_spectrum(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .printed
            .iter()
            .map(|s| rational::parse(s).expect("validated on load"))
            .collect();
        v.sort();
        v
    }

    /// Printed entries with the erratum applied, ascending.
    pub fn corrected_spectrum(&self) -> Vec<Rational> {
        let mut entries = self.printed.clone();
        if let Some(e) = &self.erratum {
            if let Some(slot) = entries.iter_mut().find(|s| **s == e.printed) {
                slot.clone_from(&e.derived);
            }
        }
        let mut v: Vec<Rational> = entries
            .iter()
            .map(|s| rational::parse(s).expect("validated on load"))
            .collect();
        v.sort();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRow {
    pub family: Family,
    pub templates: [String; 3],
}

impl InvariantRow {
    pub fn polynomials_at(&self, rank: u32) -> Result<Vec<Polynomial>> {
        self.templates
            .iter()
            .map(|t| Polynomial::parse(&expand_template(t, rank)?))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureTables {
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    pub invariants: Vec<InvariantRow>,
}

impl FixtureTables {
    pub fn parse(table1: &str, table2: &str, invariants: &str) -> Result<Self> {
        let table1 = rows(table1, 5)?
            .into_iter()
            .map(|f| {
                Ok(Table1Row {
                    family: family_of(f[0])?,
                    name: f[1].to_string(),
                    group: f[2].to_string(),
                    order: Affine::parse(f[3])?,
                    equation: f[4].to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let table2 = rows(table2, 4)?
            .into_iter()
            .map(|f| {
                let rank = f[1]
                    .parse()
                    .map_err(|_| Error::usage(format!("bad rank '{}'", f[1])))?;
                let ade = AdeType::new(family_of(f[0])?, rank)?;
                let printed: Vec<String> = f[2].split(',').map(|s| s.trim().to_string()).collect();
                for p in &printed {
                    rational::parse(p)?;
                }
                let erratum = match f[3] {
                    "-" => None,
                    e => {
                        let (printed_entry, derived) = e
                            .split_once("=>")
                            .ok_or_else(|| Error::usage(format!("bad erratum '{e}'")))?;
                        rational::parse(derived)?;
                        if !printed.iter().any(|p| p == printed_entry) {
                            return Err(Error::usage(format!(
                                "erratum entry {printed_entry} does not occur in the {ade} row"
                            )));
                        }
                        Some(Erratum {
                            printed: printed_entry.to_string(),
                            derived: derived.to_string(),
                        })
                    }
                };
                Ok(Table2Row { ade, printed, erratum })
            })
            .collect::<Result<Vec<_>>>()?;
        let invariants = rows(invariants, 4)?
            .into_iter()
            .map(|f| {
                Ok(InvariantRow {
                    family: family_of(f[0])?,
                    templates: [f[1].to_string(), f[2].to_string(), f[3].to_string()],
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FixtureTables {
            table1,
            table2,
            invariants,
        })
    }

    pub fn table1_row(&self, family: Family) -> Option<&Table1Row> {
        self.table1.iter().find(|r| r.family == family)
    }

    pub fn table2_row(&self, ade: AdeType) -> Option<&Table2Row> {
        self.table2.iter().find(|r| r.ade == ade)
    }

    pub fn invariant_row(&self, family: Family) -> Option<&InvariantRow> {
        self.invariants.iter().find(|r| r.family == family)
    }

    /// The Kleinian polynomial of `ade`.
    pub fn equation(&self, ade: AdeType) -> Result<Polynomial> {
        self.table1_row(ade.family())
            .ok_or_else(|| Error::usage(format!("no equation for {ade}")))?
            .equation_at(ade.rank())
    }
}

/// The embedded fixture tables.
pub fn fixtures() -> &'static FixtureTables {
    static TABLES: OnceLock<FixtureTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        FixtureTables::parse(TABLE1_TSV, TABLE2_TSV, INVARIANTS_TSV).expect("embedded fixtures are well formed")
    })
}
