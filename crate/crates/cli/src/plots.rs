//! SVG figures: the point field, its full connection graph, shortest paths
//! and a single route.

use quasiroute::io::format_path;
use quasiroute::svg::{color, Svg};
use quasiroute::{AllPairsResult, Boundary, Graph, Point};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;
/// Pair legends are drawn only for fields this small.
pub const LEGEND_MAX_POINTS: usize = 10;

/// Maps field coordinates into the drawing square, y pointing up.
struct Frame {
    b: Boundary,
    scale: f64,
}

impl Frame {
    fn new(b: Boundary) -> Self {
        let span = b.width().max(b.height());
        let scale = if span > 0.0 {
            (SIZE - 2.0 * MARGIN) / span
        } else {
            1.0
        };
        Frame { b, scale }
    }

    fn at(&self, p: Point) -> (f64, f64) {
        (
            MARGIN + (p.x - self.b.x_min) * self.scale,
            SIZE - MARGIN - (p.y - self.b.y_min) * self.scale,
        )
    }

    fn canvas(&self, extra_height: f64, title: &str) -> Svg {
        let mut doc = Svg::new(SIZE, SIZE + extra_height);
        doc.text(SIZE / 2.0, 24.0, 14.0, "middle", title);
        let (x0, y0) = self.at(Point::new(self.b.x_min, self.b.y_max));
        doc.rect_outline(
            x0,
            y0,
            self.b.width() * self.scale,
            self.b.height() * self.scale,
            "#444",
        );
        doc
    }

    fn vertices(&self, doc: &mut Svg, pts: &[Point], labels: bool) {
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.at(p);
            doc.marker(x, y, 4.0, "#d62728");
            if labels {
                doc.text(x + 6.0, y - 6.0, 10.0, "start", &i.to_string());
            }
        }
    }
}

/// Points evenly spaced on a circle, for graphs read without coordinates.
pub fn circle_layout(n: usize) -> (Vec<Point>, Boundary) {
    let pts = (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n.max(1) as f64;
            Point::new(50.0 + 45.0 * t.cos(), 50.0 + 45.0 * t.sin())
        })
        .collect();
    (pts, Boundary::default())
}

/// The field inside its boundary rectangle, one marker per point.
pub fn scatter(pts: &[Point], b: Boundary) -> String {
    let f = Frame::new(b);
    let mut doc = f.canvas(0.0, &format!("{} points", pts.len()));
    f.vertices(&mut doc, pts, false);
    doc.finish()
}

/// Every edge of `g` drawn between its endpoints.
pub fn connections(pts: &[Point], b: Boundary, g: &Graph) -> String {
    let f = Frame::new(b);
    let mut doc = f.canvas(
        0.0,
        &format!("{} vertices, {} edges", pts.len(), g.edge_count()),
    );
    for e in g.edges() {
        let (x1, y1) = f.at(pts[e.u]);
        let (x2, y2) = f.at(pts[e.v]);
        doc.line(x1, y1, x2, y2, "#999", 0.8);
    }
    f.vertices(&mut doc, pts, true);
    doc.finish()
}

/// Every reconstructed shortest path; small fields get one colour per pair
/// and a legend listing the route and cost of each pair.
pub fn shortest_paths(pts: &[Point], b: Boundary, ap: &AllPairsResult, directed: bool) -> String {
    let f = Frame::new(b);
    let pairs: Vec<(usize, usize, Vec<usize>)> = ap
        .all_paths()
        .into_iter()
        .filter(|&(i, j, _)| directed || i < j)
        .filter_map(|(i, j, p)| p.map(|p| (i, j, p)))
        .collect();
    let legend = pts.len() <= LEGEND_MAX_POINTS;
    let extra = if legend {
        16.0 * pairs.len() as f64 + 10.0
    } else {
        0.0
    };
    let mut doc = f.canvas(extra, "shortest paths");
    for (k, (_, _, path)) in pairs.iter().enumerate() {
        let line: Vec<(f64, f64)> = path.iter().map(|&v| f.at(pts[v])).collect();
        let stroke = if legend { color(k) } else { "#1f77b4" };
        doc.polyline(&line, stroke, 1.5);
    }
    f.vertices(&mut doc, pts, true);
    if legend {
        for (k, (i, j, path)) in pairs.iter().enumerate() {
            let y = SIZE + 6.0 + 16.0 * k as f64;
            doc.rect(MARGIN, y, 10.0, 10.0, color(k));
            doc.text(
                MARGIN + 16.0,
                y + 9.0,
                11.0,
                "start",
                &format!(
                    "{i} to {j}: {} (cost {:.3})",
                    format_path(path),
                    ap.dist.get(*i, *j)
                ),
            );
        }
    }
    doc.finish()
}

/// One route drawn over the field.
pub fn route(pts: &[Point], b: Boundary, path: &[usize], title: &str) -> String {
    let f = Frame::new(b);
    let mut doc = f.canvas(0.0, title);
    let line: Vec<(f64, f64)> = path.iter().map(|&v| f.at(pts[v])).collect();
    doc.polyline(&line, "#2ca02c", 2.0);
    f.vertices(&mut doc, pts, true);
    doc.finish()
}
