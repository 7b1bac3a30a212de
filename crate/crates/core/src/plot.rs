//! Deterministic CSV and SVG emitters for pair sets.
//!
//! CSV: a `b,i` header, one `b,i` row per pair in lexicographic order, LF
//! line endings, no trailing whitespace. SVG: a fixed 1000x800 viewport,
//! one filled circle per pair, optional cone facet overlays, axis labels
//! `b` and `i`. Pixel positions are computed in integer arithmetic so a
//! given input always produces the identical byte stream.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::cones::{cone_boundary_lines, ConeIndex, DoubledPoint};
use crate::lattice::BiPair;
use crate::realize::PairSet;
use crate::Error;

pub const SVG_WIDTH: i64 = 1000;
pub const SVG_HEIGHT: i64 = 800;

const PLOT_X: i64 = 70;
const PLOT_Y: i64 = 20;
const PLOT_W: i64 = 910;
const PLOT_H: i64 = 720;

/// Write the pair set as CSV.
pub fn write_pairs_csv<W: Write>(mut out: W, set: &PairSet) -> io::Result<()> {
    out.write_all(b"b,i\n")?;
    for p in set.iter() {
        writeln!(out, "{},{}", p.boundary, p.interior)?;
    }
    Ok(())
}

pub fn pairs_csv_string(set: &PairSet) -> String {
    let mut buf = Vec::new();
    write_pairs_csv(&mut buf, set).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

/// Parse a pairs CSV back into its rows.
pub fn parse_pairs_csv(text: &str) -> Result<Vec<BiPair>, Error> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "b,i")) => {}
        other => {
            return Err(Error::CsvParse {
                line: 1,
                reason: format!("expected header \"b,i\", got {:?}", other.map(|(_, l)| l)),
            })
        }
    }
    let mut pairs = Vec::new();
    for (idx, line) in lines {
        let err = |reason: String| Error::CsvParse {
            line: idx + 1,
            reason,
        };
        let (b, i) = line
            .split_once(',')
            .ok_or_else(|| err("missing comma".into()))?;
        let boundary = b
            .parse::<i64>()
            .map_err(|e| err(format!("bad b field {b:?}: {e}")))?;
        let interior = i
            .parse::<i64>()
            .map_err(|e| err(format!("bad i field {i:?}: {e}")))?;
        pairs.push(BiPair::new(boundary, interior));
    }
    Ok(pairs)
}

/// Scatter plot options. `b_crop` restricts the window to `b <= b_crop`
/// (and to the `i` range the set is complete on); `cones` overlays the facet
/// lines of the given inclusive index range.
#[derive(Clone, Debug, Default)]
pub struct SvgOptions {
    pub b_crop: Option<i64>,
    pub cones: Option<(i64, i64)>,
}

fn div_round(num: i64, den: i64) -> i64 {
    debug_assert!(num >= 0 && den > 0);
    (2 * num + den) / (2 * den)
}

struct Frame {
    b_hi: i64,
    i_hi: i64,
}

impl Frame {
    /// Map doubled data coordinates to pixels.
    fn x(&self, twice_b: i64) -> i64 {
        PLOT_X + div_round(twice_b * PLOT_W, 2 * self.b_hi)
    }

    fn y(&self, twice_i: i64) -> i64 {
        PLOT_Y + PLOT_H - div_round(twice_i * PLOT_H, 2 * self.i_hi)
    }

    fn point(&self, p: DoubledPoint) -> (i64, i64) {
        (self.x(p.twice_b), self.y(p.twice_i))
    }
}

/// Render the scatter of a pair set as an SVG document.
///
/// With a `b_crop` the plotted window is `b <= b_crop`,
/// `i <= (n_max + 2 - b_crop)/2`: every lattice pair inside that rectangle
/// has normalized volume within the set's bound, so empty regions in the
/// picture are genuinely empty, not enumeration artifacts.
pub fn render_pairs_svg(set: &PairSet, options: &SvgOptions) -> String {
    let (b_hi, i_hi, shown): (i64, i64, Vec<BiPair>) = match options.b_crop {
        Some(crop) => {
            let i_window = (set.n_max() + 2 - crop).div_euclid(2);
            let kept = set
                .iter()
                .filter(|p| p.boundary <= crop && p.interior <= i_window)
                .collect();
            (crop.max(1), i_window.max(1), kept)
        }
        None => {
            let b_hi = set.iter().map(|p| p.boundary).max().unwrap_or(1).max(1);
            let i_hi = set.iter().map(|p| p.interior).max().unwrap_or(1).max(1);
            (b_hi, i_hi, set.iter().collect())
        }
    };
    let frame = Frame { b_hi, i_hi };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_WIDTH}\" height=\"{SVG_HEIGHT}\" viewBox=\"0 0 {SVG_WIDTH} {SVG_HEIGHT}\">"
    );
    let _ = writeln!(
        svg,
        "<rect x=\"0\" y=\"0\" width=\"{SVG_WIDTH}\" height=\"{SVG_HEIGHT}\" fill=\"#ffffff\"/>"
    );
    let _ = writeln!(
        svg,
        "<clipPath id=\"plot\"><rect x=\"{PLOT_X}\" y=\"{PLOT_Y}\" width=\"{PLOT_W}\" height=\"{PLOT_H}\"/></clipPath>"
    );

    // axes
    let x0 = PLOT_X;
    let x1 = PLOT_X + PLOT_W;
    let y0 = PLOT_Y + PLOT_H;
    let _ = writeln!(
        svg,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"#000000\"/>"
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{x0}\" y1=\"{PLOT_Y}\" x2=\"{x0}\" y2=\"{y0}\" stroke=\"#000000\"/>"
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"18\">b</text>",
        PLOT_X + PLOT_W / 2,
        SVG_HEIGHT - 14
    );
    let _ = writeln!(
        svg,
        "<text x=\"18\" y=\"{}\" font-family=\"sans-serif\" font-size=\"18\">i</text>",
        PLOT_Y + PLOT_H / 2
    );
    for (value, px) in [(0, x0), (b_hi, x1)] {
        let _ = writeln!(
            svg,
            "<text x=\"{px}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{value}</text>",
            y0 + 18
        );
    }
    for (value, py) in [(0, y0), (i_hi, PLOT_Y)] {
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{py}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">{value}</text>",
            x0 - 6
        );
    }

    let _ = writeln!(svg, "<g clip-path=\"url(#plot)\">");
    for p in &shown {
        let (cx, cy) = frame.point(DoubledPoint {
            twice_b: 2 * p.boundary,
            twice_i: 2 * p.interior,
        });
        let _ = writeln!(
            svg,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"2\" fill=\"#1f3b73\"/>"
        );
    }
    if let Some((lo, hi)) = options.cones {
        debug_assert!(lo >= 1 && lo <= hi, "cone range validated by callers");
        for c in lo..=hi {
            let Ok(idx) = ConeIndex::new(c) else { continue };
            let Some(lines) = cone_boundary_lines(idx, b_hi) else {
                continue;
            };
            for (start, end) in [lines.lower, lines.upper] {
                let (sx, sy) = frame.point(start);
                let (ex, ey) = frame.point(end);
                let _ = writeln!(
                    svg,
                    "<line x1=\"{sx}\" y1=\"{sy}\" x2=\"{ex}\" y2=\"{ey}\" stroke=\"#c0392b\" stroke-width=\"1\"/>"
                );
            }
        }
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::enumerate_pairs;

    #[test]
    fn csv_format_and_roundtrip() {
        let set = enumerate_pairs(4).unwrap();
        let csv = pairs_csv_string(&set);
        assert_eq!(csv, "b,i\n3,0\n3,1\n4,0\n4,1\n5,0\n6,0\n");

        let mut parsed = parse_pairs_csv(&csv).unwrap();
        parsed.sort();
        parsed.dedup();
        assert_eq!(parsed, set.pairs());
    }

    #[test]
    fn csv_rejects_malformed_input() {
        assert!(parse_pairs_csv("x,y\n1,2\n").is_err());
        assert!(parse_pairs_csv("b,i\n3\n").is_err());
        assert!(parse_pairs_csv("b,i\n3,zebra\n").is_err());
    }

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let set = enumerate_pairs(30).unwrap();
        let options = SvgOptions {
            b_crop: Some(20),
            cones: Some((1, 3)),
        };
        let a = render_pairs_svg(&set, &options);
        let b = render_pairs_svg(&set, &options);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg "));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(a.contains("<circle"));
        // cones 1 and 2 have apexes at b = 6 and 14, inside the crop
        assert!(a.matches("<line").count() >= 2 + 4);
        assert_eq!(a.matches('\u{0}').count(), 0);
    }

    #[test]
    fn svg_crop_hides_incomplete_rows() {
        let set = enumerate_pairs(10).unwrap();
        // crop at b = 8: complete up to i = (10 + 2 - 8)/2 = 2
        let svg = render_pairs_svg(
            &set,
            &SvgOptions {
                b_crop: Some(8),
                cones: None,
            },
        );
        let shown = svg.matches("<circle").count();
        let expected = set
            .iter()
            .filter(|p| p.boundary <= 8 && p.interior <= 2)
            .count();
        assert_eq!(shown, expected);
    }
}
