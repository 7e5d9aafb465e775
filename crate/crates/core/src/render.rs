//! Text, SVG, DOT and JSON renderings of bases, diagrams, orbit graphs and
//! hom/ext tables. Output is deterministic.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::json;

use crate::bijection::in_vector;
use crate::braid::orbit_graph;
use crate::dbasis::{to_arcs, DistinguishedBasis};
use crate::error::{Error, Result};
use crate::parking::{to_diagram, ParkingDiagram};
use crate::quiver::hom_ext_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Ascii,
    Svg,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Arcs,
    Diagram,
    Orbit,
    Table,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Ascii, Format::Svg, Format::Dot, Format::Json];
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Arcs, Target::Diagram, Target::Orbit, Target::Table];
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Ascii => "ascii",
            Format::Svg => "svg",
            Format::Dot => "dot",
            Format::Json => "json",
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Arcs => "arcs",
            Target::Diagram => "diagram",
            Target::Orbit => "orbit",
            Target::Table => "table",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Format::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::UnsupportedRender { format: s.into(), target: "any target".into() })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::UnsupportedRender { format: "any format".into(), target: s.into() })
    }
}

/// A supported `(format, target)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RenderSpec {
    format: Format,
    target: Target,
}

impl RenderSpec {
    pub fn new(format: Format, target: Target) -> Result<Self> {
        use Format::*;
        use Target::*;
        let ok = match target {
            Arcs | Diagram => matches!(format, Ascii | Svg | Json),
            Orbit => matches!(format, Dot | Json),
            Table => matches!(format, Ascii | Json),
        };
        if !ok {
            return Err(Error::UnsupportedRender { format: format.to_string(), target: target.to_string() });
        }
        Ok(Self { format, target })
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn target(&self) -> Target {
        self.target
    }
}

/// Orbit targets only use the rank of `basis`.
pub fn render(spec: RenderSpec, basis: &DistinguishedBasis) -> Result<String> {
    use Format::*;
    use Target::*;
    let f = in_vector(basis);
    Ok(match (spec.target, spec.format) {
        (Arcs, Ascii) => arcs_ascii(basis),
        (Arcs, Svg) => arcs_svg(basis),
        (Arcs, Json) => {
            let arcs: Vec<[usize; 2]> = to_arcs(basis).arcs.iter().map(|a| [a.left, a.right]).collect();
            json_line(json!({ "n": basis.n(), "basis": basis, "arcs": arcs }))
        }
        (Diagram, Ascii) => diagram_ascii(&to_diagram(&f)),
        (Diagram, Svg) => diagram_svg(&to_diagram(&f)),
        (Diagram, Json) => json_line(json!({ "n": basis.n(), "f": f, "rows": to_diagram(&f).rows() })),
        (Orbit, Dot) => orbit_graph(basis.n())?.to_dot(false),
        (Orbit, Json) => json_line(serde_json::to_value(orbit_graph(basis.n())?).expect("serializable")),
        (Table, Ascii) => table_ascii(basis),
        (Table, Json) => {
            let t = hom_ext_table(basis);
            json_line(json!({ "n": basis.n(), "basis": basis, "hom": t.hom, "ext": t.ext }))
        }
        _ => unreachable!("RenderSpec::new rejects {spec:?}"),
    })
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

/// One line per arc, in label order, under a ruler of the points `0..=n`.
pub fn arcs_ascii(basis: &DistinguishedBasis) -> String {
    let n = basis.n();
    let width = 3 * n + 1;
    let mut out = String::new();
    let ruler: String = (0..=n).map(|i| format!("{i:<3}")).collect();
    writeln!(out, "{}", ruler.trim_end()).unwrap();
    for (k, arc) in to_arcs(basis).arcs.iter().enumerate() {
        let mut line = vec![' '; width];
        for c in &mut line[3 * arc.left..=3 * arc.right] {
            *c = '-';
        }
        line[3 * arc.left] = 'o';
        line[3 * arc.right] = 'o';
        let line: String = line.into_iter().collect();
        writeln!(out, "{line}  {} {}", k + 1, basis.get(k + 1)).unwrap();
    }
    out
}

const UNIT: usize = 40;
const MARGIN: usize = 20;

/// Semicircles over integer points; labels sit at the apex.
pub fn arcs_svg(basis: &DistinguishedBasis) -> String {
    let n = basis.n();
    let width = 2 * MARGIN + UNIT * n;
    let base = MARGIN + UNIT * n / 2 + 20;
    let height = base + 30;
    let px = |i: usize| MARGIN + UNIT * i;
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">"#).unwrap();
    writeln!(out, r#"  <line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#, px(0), px(n)).unwrap();
    for i in 0..=n {
        writeln!(out, r#"  <text x="{}" y="{}" text-anchor="middle">{i}</text>"#, px(i), base + 20).unwrap();
    }
    for (k, arc) in to_arcs(basis).arcs.iter().enumerate() {
        let r = UNIT * (arc.right - arc.left) / 2;
        writeln!(
            out,
            r#"  <path class="arc" data-label="{}" data-left="{}" data-right="{}" d="M {} {base} A {r} {r} 0 0 1 {} {base}" fill="none" stroke="black"/>"#,
            k + 1,
            arc.left,
            arc.right,
            px(arc.left),
            px(arc.right)
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            (px(arc.left) + px(arc.right)) / 2,
            base - r - 3,
            k + 1
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Rows top-down under the x-axis, as in the usual staircase picture;
/// `#` cells belong to the diagram, `.` cells are free space above the
/// diagonal. Labels sit at the left.
pub fn diagram_ascii(d: &ParkingDiagram) -> String {
    let n = d.n();
    let w = n.to_string().len();
    let mut out = format!("{:w$} +{}\n", "", "-".repeat(n));
    for (i, row) in d.rows().iter().enumerate().rev() {
        let cells = format!("{}{}", "#".repeat(row.length), ".".repeat(i - row.length));
        writeln!(out, "{:>w$} |{cells}", row.label).unwrap();
    }
    out
}

pub fn diagram_svg(d: &ParkingDiagram) -> String {
    const CELL: usize = 30;
    let n = d.n();
    let size = 2 * MARGIN + CELL * (n + 1);
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}">"#).unwrap();
    let (x0, y0) = (MARGIN + CELL, MARGIN);
    writeln!(out, r#"  <line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#, x0 + CELL * n).unwrap();
    writeln!(out, r#"  <line x1="{x0}" y1="{y0}" x2="{x0}" y2="{}" stroke="black"/>"#, y0 + CELL * n).unwrap();
    writeln!(
        out,
        r#"  <line x1="{x0}" y1="{}" x2="{}" y2="{y0}" stroke="gray" stroke-dasharray="4 3"/>"#,
        y0 + CELL * n,
        x0 + CELL * n
    )
    .unwrap();
    for (i, row) in d.rows().iter().enumerate() {
        // bottom-up index i is drawn at depth n - i
        let top = y0 + CELL * (n - 1 - i);
        for c in 0..row.length {
            writeln!(
                out,
                r#"  <rect x="{}" y="{top}" width="{CELL}" height="{CELL}" fill="none" stroke="black"/>"#,
                x0 + CELL * c
            )
            .unwrap();
        }
        writeln!(
            out,
            r#"  <text class="label" data-label="{}" x="{}" y="{}">{}</text>"#,
            row.label,
            x0 + CELL * row.length + 4,
            top + CELL - 8,
            row.label
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// `dim Hom(E_i, E_j)` and `dim Ext^1(E_i, E_j)` side by side.
pub fn table_ascii(basis: &DistinguishedBasis) -> String {
    let t = hom_ext_table(basis);
    let n = t.n;
    let w = n.to_string().len().max(1);
    let header: String = (1..=n).map(|j| format!(" {j:>w$}")).collect();
    let mut out = format!("{:>w$}  hom{header}  |  ext{header}\n", "");
    for i in 0..n {
        let hom: String = t.hom[i].iter().map(|v| format!(" {v:>w$}")).collect();
        let ext: String = t.ext[i].iter().map(|v| format!(" {v:>w$}")).collect();
        writeln!(out, "{:>w$}     {hom}  |     {ext}", i + 1).unwrap();
    }
    out
}
