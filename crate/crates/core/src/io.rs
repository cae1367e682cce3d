//! Facet file format: UTF-8 text, `#` starts a comment, each non-blank line
//! is one facet as whitespace-separated positive integers. The writer emits
//! the canonical form with dense labels.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut facet = Vec::new();
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad label {tok:?}", lineno + 1)))?;
            if v == 0 {
                return Err(Error::BadLabel(0));
            }
            facet.push(v);
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(Error::EmptyInput);
    }
    SimplicialComplex::from_facets(facets)
}

pub fn write_facets(cx: &SimplicialComplex) -> String {
    let dense = cx.relabel_dense();
    let mut out = String::new();
    for facet in dense.facets() {
        let line: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# a triangle boundary\n1 2\n2 3\n\n1 3   # last edge\n";
        let cx = parse_facets(text).unwrap();
        assert_eq!(cx.f_vector().entries(), &[1, 3, 3]);
        let written = write_facets(&cx);
        assert_eq!(written, "1 2\n1 3\n2 3\n");
        assert_eq!(parse_facets(&written).unwrap(), cx);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_facets("# only comments\n"), Err(Error::EmptyInput));
        assert!(matches!(parse_facets("1 x 3\n"), Err(Error::Parse(_))));
        assert_eq!(parse_facets("1 0 3\n"), Err(Error::BadLabel(0)));
    }
}
