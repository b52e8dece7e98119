//! Canonical text format for jets: one line per coefficient,
//!
//! ```text
//! jet n=<n> order=<k>
//! G <l> <i> <j> : <e1> <e2> ... <e2n> : <num>/<den>
//! V <m> <comp> : <e1> <e2> ... <e2n> : <num>/<den>
//! ```
//!
//! Lines are emitted in a fixed order (degree, then upper index, then the
//! sorted lower pair, then graded-lex monomial), so two equal jets always
//! serialize to identical bytes and files are diffable.

use std::fmt::Write as FmtWrite;
use std::str::FromStr;

use crate::algebra::{Int, Monomial, Rational};
use crate::error::Error;
use crate::jets::{ConnectionJet, FedosovJet, VectorFieldJet};
use crate::Result;

fn mono_text(m: &Monomial) -> String {
    m.0.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Serialize a connection jet (graded G lines).
pub fn write_connection_jet(jet: &ConnectionJet) -> String {
    let mut out = String::new();
    writeln!(out, "jet n={} order={}", jet.half_dim(), jet.order()).unwrap();
    for comp in jet.components() {
        for (key, v) in comp.iter() {
            writeln!(
                out,
                "G {} {} {} : {} : {}/{}",
                key.l,
                key.i,
                key.j,
                mono_text(&key.mono),
                v.numer(),
                v.denom()
            )
            .unwrap();
        }
    }
    out
}

/// Serialize a Fedosov jet; the symplectic part is the fixed standard
/// matrix, so only the connection carries data.
pub fn write_fedosov_jet(jet: &FedosovJet) -> String {
    write_connection_jet(jet.connection())
}

/// Serialize a vector field jet (V lines).
pub fn write_vector_field_jet(v: &VectorFieldJet) -> String {
    let mut out = String::new();
    let order = v.max_order();
    writeln!(out, "jet n={} order={}", v.half_dim(), order).unwrap();
    for m in v.orders() {
        let comps = v.component(m).unwrap();
        for (c, poly) in comps.iter().enumerate() {
            for (mono, coeff) in poly.terms() {
                writeln!(
                    out,
                    "V {} {} : {} : {}/{}",
                    m,
                    c + 1,
                    mono_text(mono),
                    coeff.numer(),
                    coeff.denom()
                )
                .unwrap();
            }
        }
    }
    out
}

struct Header {
    n: usize,
    order: usize,
}

fn parse_header(line: &str) -> Result<Header> {
    let rest = line
        .strip_prefix("jet ")
        .ok_or_else(|| Error::Parse(format!("expected `jet` header, got `{line}`")))?;
    let mut n = None;
    let mut order = None;
    for part in rest.split_whitespace() {
        if let Some(v) = part.strip_prefix("n=") {
            n = Some(v.parse().map_err(|_| Error::Parse(format!("bad n in `{line}`")))?);
        } else if let Some(v) = part.strip_prefix("order=") {
            order = Some(
                v.parse()
                    .map_err(|_| Error::Parse(format!("bad order in `{line}`")))?,
            );
        }
    }
    match (n, order) {
        (Some(n), Some(order)) => Ok(Header { n, order }),
        _ => Err(Error::Parse(format!("incomplete header `{line}`"))),
    }
}

fn parse_coeff_line(line: &str, nvars: usize) -> Result<(Vec<usize>, Monomial, Rational)> {
    let mut sections = line.split(':');
    let head = sections
        .next()
        .ok_or_else(|| Error::Parse(format!("bad line `{line}`")))?;
    let mono = sections
        .next()
        .ok_or_else(|| Error::Parse(format!("missing monomial in `{line}`")))?;
    let value = sections
        .next()
        .ok_or_else(|| Error::Parse(format!("missing value in `{line}`")))?;

    let indices: Vec<usize> = head
        .split_whitespace()
        .skip(1)
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad index in `{line}`"))))
        .collect::<Result<_>>()?;
    let exps: Vec<u32> = mono
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad exponent in `{line}`"))))
        .collect::<Result<_>>()?;
    if exps.len() != nvars {
        return Err(Error::Parse(format!(
            "expected {nvars} exponents in `{line}`"
        )));
    }
    let value = value.trim();
    let (num, den) = value
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("value must be num/den in `{line}`")))?;
    let num = Int::from_str(num.trim()).map_err(|_| Error::Parse(format!("bad numerator in `{line}`")))?;
    let den = Int::from_str(den.trim()).map_err(|_| Error::Parse(format!("bad denominator in `{line}`")))?;
    Ok((indices, Monomial(exps), Rational::new(num, den)))
}

/// Parse a connection jet in the canonical text format.
pub fn read_connection_jet(text: &str) -> Result<ConnectionJet> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = parse_header(
        lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?,
    )?;
    let mut jet = ConnectionJet::zero(header.n, header.order)?;
    for line in lines {
        if !line.starts_with('G') {
            return Err(Error::Parse(format!("expected G line, got `{line}`")));
        }
        let (idx, mono, v) = parse_coeff_line(line, 2 * header.n)?;
        if idx.len() != 3 {
            return Err(Error::Parse(format!("G line needs l i j: `{line}`")));
        }
        let d = mono.degree();
        if d > header.order {
            return Err(Error::Parse(format!("degree beyond jet order: `{line}`")));
        }
        jet.component_mut(d).add(idx[0], idx[1], idx[2], mono, v);
    }
    Ok(jet)
}

/// Parse a vector field jet in the canonical text format.
pub fn read_vector_field_jet(text: &str) -> Result<VectorFieldJet> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = parse_header(
        lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?,
    )?;
    let n = header.n;
    let mut per_order: std::collections::BTreeMap<usize, Vec<crate::algebra::HomogeneousPolynomial>> =
        std::collections::BTreeMap::new();
    for line in lines {
        if !line.starts_with('V') {
            return Err(Error::Parse(format!("expected V line, got `{line}`")));
        }
        let (idx, mono, v) = parse_coeff_line(line, 2 * n)?;
        if idx.len() != 2 {
            return Err(Error::Parse(format!("V line needs m comp: `{line}`")));
        }
        let (m, comp) = (idx[0], idx[1]);
        if mono.degree() != m {
            return Err(Error::Parse(format!("degree/order mismatch: `{line}`")));
        }
        let entry = per_order.entry(m).or_insert_with(|| {
            (0..2 * n)
                .map(|_| crate::algebra::HomogeneousPolynomial::zero(n, m))
                .collect()
        });
        entry[comp - 1].add_term(mono, v);
    }
    let mut out = VectorFieldJet::new(n)?;
    for (m, polys) in per_order {
        out.set_component(m, polys);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn connection_round_trip() {
        let mut jet = ConnectionJet::zero(1, 1).unwrap();
        jet.component_mut(0).add(2, 1, 1, Monomial::one(2), rat(1));
        jet.component_mut(1)
            .add(1, 1, 2, Monomial::var(2, 2), crate::algebra::ratio(-3, 7));
        let text = write_connection_jet(&jet);
        let back = read_connection_jet(&text).unwrap();
        assert_eq!(jet, back);
        // deterministic bytes
        assert_eq!(text, write_connection_jet(&back));
    }

    #[test]
    fn field_round_trip() {
        let mut v = VectorFieldJet::new(1).unwrap();
        v.set_component(
            2,
            vec![
                crate::algebra::HomogeneousPolynomial::term(
                    1,
                    Monomial(vec![1, 1]),
                    rat(4),
                ),
                crate::algebra::HomogeneousPolynomial::zero(1, 2),
            ],
        );
        let text = write_vector_field_jet(&v);
        let back = read_vector_field_jet(&text).unwrap();
        assert_eq!(v, back);
    }
}
