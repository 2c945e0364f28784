//! CSV encodings for point fields, edge lists, distance matrices and path listings.
//!
//! Floats are written with Rust's shortest round-trip formatting, so parsing a
//! file back yields bit-identical values. Unreachable distances are written as
//! `inf`. Parsers skip blank lines and lines starting with `#`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::AllPairsResult;
use crate::geometry::{Point, PointField};
use crate::graph::{DistanceMatrix, Edge, Graph};

pub const POINTS_HEADER: &str = "idx,x,y";
pub const EDGES_HEADER: &str = "u,v,w";
pub const LISTING_HEADER: &str = "i,j,cost,path";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &str,
) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l.replace(' ', "") == header => Ok(()),
        Some((n, l)) => Err(Error::parse(
            n,
            format!("expected header `{header}`, got `{l}`"),
        )),
        None => Err(Error::parse(0, format!("missing header `{header}`"))),
    }
}

fn fields<const N: usize>(line: usize, text: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    parts
        .try_into()
        .map_err(|p: Vec<&str>| Error::parse(line, format!("expected {N} fields, got {}", p.len())))
}

fn real(line: usize, s: &str) -> Result<f64> {
    s.parse::<f64>()
        .map_err(|_| Error::parse(line, format!("invalid number `{s}`")))
}

fn index(line: usize, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("invalid index `{s}`")))
}

pub fn points_csv(field: &PointField) -> String {
    let mut out = String::from(POINTS_HEADER);
    out.push('\n');
    for (i, p) in field.points().iter().enumerate() {
        let _ = writeln!(out, "{i},{},{}", p.x, p.y);
    }
    out
}

/// Parses `idx,x,y` rows; indices must run `0, 1, 2, ...` and coordinates be finite.
pub fn parse_points_csv(text: &str) -> Result<Vec<Point>> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, POINTS_HEADER)?;
    let mut points = Vec::new();
    for (n, l) in lines {
        let [idx, x, y] = fields::<3>(n, l)?;
        let idx = index(n, idx)?;
        if idx != points.len() {
            return Err(Error::parse(
                n,
                format!("expected index {}, got {idx}", points.len()),
            ));
        }
        let (x, y) = (real(n, x)?, real(n, y)?);
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::parse(n, "coordinates must be finite"));
        }
        points.push(Point::new(x, y));
    }
    Ok(points)
}

pub fn edges_csv(g: &Graph) -> String {
    let mut out = String::from(EDGES_HEADER);
    out.push('\n');
    for e in g.edges() {
        let _ = writeln!(out, "{},{},{}", e.u, e.v, e.w);
    }
    out
}

/// Parses a `u,v,w` edge list into a graph on `vertices` vertices, or on
/// `max id + 1` vertices when `vertices` is `None`.
pub fn parse_edges_csv(text: &str, directed: bool, vertices: Option<usize>) -> Result<Graph> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, EDGES_HEADER)?;
    let mut edges = Vec::new();
    for (n, l) in lines {
        let [u, v, w] = fields::<3>(n, l)?;
        edges.push(Edge::new(index(n, u)?, index(n, v)?, real(n, w)?));
    }
    let inferred = edges
        .iter()
        .map(|e| e.u.max(e.v).saturating_add(1))
        .max()
        .unwrap_or(0);
    Graph::new(vertices.unwrap_or(inferred), edges, directed)
}

/// Matrix with a header row of column indices and a leading row-index column.
pub fn distance_matrix_csv(d: &DistanceMatrix) -> String {
    let n = d.size();
    let mut out = String::new();
    for j in 0..n {
        let _ = write!(out, ",{j}");
    }
    out.push('\n');
    for i in 0..n {
        let _ = write!(out, "{i}");
        for j in 0..n {
            let _ = write!(out, ",{}", d.get(i, j));
        }
        out.push('\n');
    }
    out
}

pub fn parse_distance_matrix_csv(text: &str) -> Result<DistanceMatrix> {
    let mut lines = content_lines(text);
    let header: Vec<(usize, &str)> = lines.by_ref().take(1).collect();
    let n = match header.first() {
        None => return DistanceMatrix::from_rows(Vec::new()),
        Some(&(ln, h)) => {
            let cols: Vec<&str> = h.split(',').map(str::trim).collect();
            if !cols[0].is_empty() {
                return Err(Error::parse(ln, "header must start with an empty cell"));
            }
            for (j, c) in cols[1..].iter().enumerate() {
                if index(ln, c)? != j {
                    return Err(Error::parse(ln, format!("expected column {j}, got `{c}`")));
                }
            }
            cols.len() - 1
        }
    };
    let mut rows = Vec::with_capacity(n);
    for (ln, l) in lines {
        let cells: Vec<&str> = l.split(',').map(str::trim).collect();
        if cells.len() != n + 1 {
            return Err(Error::parse(
                ln,
                format!("expected {} cells, got {}", n + 1, cells.len()),
            ));
        }
        if index(ln, cells[0])? != rows.len() {
            return Err(Error::parse(ln, format!("expected row {}", rows.len())));
        }
        let row = cells[1..]
            .iter()
            .map(|c| real(ln, c))
            .collect::<Result<Vec<f64>>>()?;
        if row.iter().any(|v| v.is_nan()) {
            return Err(Error::parse(ln, "NaN distance"));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::parse(
            0,
            format!("expected {n} rows, got {}", rows.len()),
        ));
    }
    DistanceMatrix::from_rows(rows)
}

pub fn format_path(path: &[usize]) -> String {
    path.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("->")
}

/// One row per ordered pair `i != j`: `i,j,cost,"v0->...->vj"`; unreachable
/// pairs carry `inf` and an empty path.
pub fn path_listing_csv(r: &AllPairsResult) -> String {
    let mut out = String::from(LISTING_HEADER);
    out.push('\n');
    for (i, j, path) in r.all_paths() {
        let route = path.as_deref().map(format_path).unwrap_or_default();
        let _ = writeln!(out, "{i},{j},{},\"{route}\"", r.dist.get(i, j));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::floyd_warshall;
    use crate::geometry::{generate_points, Boundary};
    use proptest::prelude::*;

    #[test]
    fn points_roundtrip_exact() {
        let f = generate_points(10, Boundary::default(), 42).unwrap();
        let text = points_csv(&f);
        assert_eq!(text.lines().count(), 11);
        assert_eq!(parse_points_csv(&text).unwrap(), f.points());
    }

    #[test]
    fn empty_points_is_header_only() {
        let f = generate_points(0, Boundary::default(), 1).unwrap();
        assert_eq!(points_csv(&f), "idx,x,y\n");
        assert!(parse_points_csv("# c\nidx,x,y\n").unwrap().is_empty());
    }

    #[test]
    fn points_errors() {
        assert!(parse_points_csv("").is_err());
        assert!(parse_points_csv("a,b,c\n").is_err());
        assert!(parse_points_csv("idx,x,y\n1,0,0\n").is_err());
        assert!(parse_points_csv("idx,x,y\n0,0\n").is_err());
        assert!(parse_points_csv("idx,x,y\n0,nan,0\n").is_err());
    }

    #[test]
    fn edges_parse() {
        let g = parse_edges_csv("u,v,w\n0,1,2\n1,2,-1\n0,2,5\n", true, None).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let g = parse_edges_csv("u,v,w\n0,1,2\n", false, Some(5)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(parse_edges_csv("u,v,w\n0,0,1\n", true, None).is_err());
        assert!(parse_edges_csv("u,v,w\n0,1,inf\n", true, None).is_err());
        assert!(parse_edges_csv("u,v,w\n0,4,1\n", true, Some(3)).is_err());
        assert_eq!(parse_edges_csv(&edges_csv(&g), false, Some(5)).unwrap(), g);
    }

    #[test]
    fn matrix_with_infinities() {
        let g = Graph::directed(3, vec![Edge::new(0, 1, 1.5)]).unwrap();
        let r = floyd_warshall(&g).unwrap();
        let csv = distance_matrix_csv(&r.dist);
        assert!(csv.starts_with(",0,1,2\n0,0,1.5,inf\n"));
        assert_eq!(parse_distance_matrix_csv(&csv).unwrap(), r.dist);
        assert!(parse_distance_matrix_csv(",0,1\n0,0,1\n").is_err());
        assert!(parse_distance_matrix_csv("x,0\n0,0\n").is_err());
    }

    #[test]
    fn listing_rows() {
        let g = Graph::directed(3, vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 2.0)]).unwrap();
        let csv = path_listing_csv(&floyd_warshall(&g).unwrap());
        assert_eq!(csv.lines().count(), 1 + 6);
        assert!(csv.contains("0,2,3,\"0->1->2\"\n"));
        assert!(csv.contains("2,0,inf,\"\"\n"));
    }

    proptest! {
        #[test]
        fn parsers_never_panic(s in "\\PC{0,200}") {
            let _ = parse_points_csv(&s);
            let _ = parse_edges_csv(&s, true, None);
            let _ = parse_distance_matrix_csv(&s);
        }

        #[test]
        fn matrix_roundtrip(rows in prop::collection::vec(prop::collection::vec(-1e6f64..1e6, 6), 6), n in 0usize..6) {
            let rows: Vec<Vec<f64>> = rows.into_iter().take(n).map(|r| r.into_iter().take(n).collect()).collect();
            let d = DistanceMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(parse_distance_matrix_csv(&distance_matrix_csv(&d)).unwrap(), d);
        }
    }
}
