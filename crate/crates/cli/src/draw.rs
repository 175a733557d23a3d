//! SVG output: annotated triangles and the spread protractor.
//!
//! Geometry stays exact up to the pixel mapping; floats appear only when a
//! coordinate is written out, always with six decimals.

use std::fmt::Write as _;

use rattrig::{analyze_triangle, DynPoint, FieldElement, FieldSpec, Rational, RationalPoint, Scalar};

use crate::error::CliError;

pub const WIDTH: u32 = 800;
pub const HEIGHT: u32 = 600;
pub const MIN_DIVISIONS: u32 = 8;

const ARC_RADIUS: f64 = 26.0;

/// Six decimals, with negative zero printed as zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').trim_matches(|c| c == '0' || c == '.').is_empty() {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, "  <title>{title}</title>");
    let _ = writeln!(out, r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
}

fn text(out: &mut String, class: &str, x: f64, y: f64, size: u32, body: &str) {
    let _ = writeln!(
        out,
        r#"  <text class="{class}" x="{}" y="{}" font-family="sans-serif" font-size="{size}" text-anchor="middle" dominant-baseline="middle">{body}</text>"#,
        num(x),
        num(y)
    );
}

fn to_f64(v: &Rational) -> f64 {
    v.to_f64().expect("rationals convert")
}

/// Maps exact coordinates into the viewport: uniform scale, 5% margin,
/// centred, y axis pointing up.
fn to_pixels(points: &[RationalPoint; 3]) -> [(f64, f64); 3] {
    let min = |f: fn(&RationalPoint) -> &Rational| points.iter().map(f).min().unwrap().clone();
    let max = |f: fn(&RationalPoint) -> &Rational| points.iter().map(f).max().unwrap().clone();
    let (x0, x1) = (min(|p| &p.x), max(|p| &p.x));
    let (y0, y1) = (min(|p| &p.y), max(|p| &p.y));
    let int = |n: u32| Rational::from_integer(n.into());
    let (mx, my) = (int(WIDTH) / int(20), int(HEIGHT) / int(20));
    let (avail_w, avail_h) = (int(WIDTH) - mx.clone() * int(2), int(HEIGHT) - my.clone() * int(2));
    let (w, h) = (x1 - x0.clone(), y1 - y0.clone());
    let scale = match (w.is_zero(), h.is_zero()) {
        (false, false) => (avail_w.clone() / w.clone()).min(avail_h.clone() / h.clone()),
        (true, false) => avail_h.clone() / h.clone(),
        (false, true) => avail_w.clone() / w.clone(),
        (true, true) => int(1),
    };
    let ox = mx + (avail_w - w * scale.clone()) / int(2);
    let oy = my + (avail_h - h * scale.clone()) / int(2);
    points.clone().map(|p| {
        let x = ox.clone() + (p.x - x0.clone()) * scale.clone();
        let y = int(HEIGHT) - oy.clone() - (p.y - y0.clone()) * scale.clone();
        (to_f64(&x), to_f64(&y))
    })
}

fn unit(from: (f64, f64), to: (f64, f64)) -> (f64, f64) {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    let n = dx.hypot(dy);
    (dx / n, dy / n)
}

/// Annotated triangle: vertex names, `Q_i` on the side opposite `A_i`, and
/// `s_i` inside a small arc at `A_i`.
pub fn triangle_svg(field: &FieldSpec, points: [DynPoint; 3]) -> Result<String, CliError> {
    if *field != FieldSpec::Rational {
        return Err(CliError::UnsupportedField(field.to_string()));
    }
    let exact = points.clone().map(|p| match (p.x, p.y) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) => Ok(RationalPoint::new(x, y)),
        _ => Err(CliError::UnsupportedField(field.to_string())),
    });
    let [a, b, c] = exact;
    let exact = [a?, b?, c?];
    let report = analyze_triangle(exact.clone())?;
    let px = to_pixels(&exact);
    let centroid = (
        (px[0].0 + px[1].0 + px[2].0) / 3.0,
        (px[0].1 + px[1].1 + px[2].1) / 3.0,
    );

    let mut out = String::new();
    header(&mut out, "triangle");
    let path: Vec<String> = px.iter().map(|(x, y)| format!("{},{}", num(*x), num(*y))).collect();
    let _ = writeln!(
        out,
        r#"  <polygon class="triangle" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        path.join(" ")
    );

    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let v = px[i];
        let _ = writeln!(
            out,
            r#"  <circle class="vertex" cx="{}" cy="{}" r="3" fill="black"/>"#,
            num(v.0),
            num(v.1)
        );
        let away = if v == centroid { (0.0, -1.0) } else { unit(centroid, v) };
        text(&mut out, "vertex-label", v.0 + 18.0 * away.0, v.1 + 18.0 * away.1, 16, &format!("A{}", i + 1));

        // side i joins the other two vertices
        let mid = ((px[j].0 + px[k].0) / 2.0, (px[j].1 + px[k].1) / 2.0);
        let out_dir = if mid == centroid { (0.0, -1.0) } else { unit(centroid, mid) };
        let q = &report.quadrances.as_array()[i];
        text(
            &mut out,
            "quadrance-label",
            mid.0 + 16.0 * out_dir.0,
            mid.1 + 16.0 * out_dir.1,
            14,
            &format!("Q{} = {q}", i + 1),
        );

        let Some(spreads) = &report.spreads else { continue };
        let s = spreads.get(i + 1);
        if s.is_zero() {
            continue;
        }
        let (u, w) = (unit(v, px[j]), unit(v, px[k]));
        let start = (v.0 + ARC_RADIUS * u.0, v.1 + ARC_RADIUS * u.1);
        let end = (v.0 + ARC_RADIUS * w.0, v.1 + ARC_RADIUS * w.1);
        let sweep = u8::from(u.0 * w.1 - u.1 * w.0 > 0.0);
        let _ = writeln!(
            out,
            r#"  <path class="spread-arc" d="M {} {} A {r} {r} 0 0 {sweep} {} {}" fill="none" stroke="gray"/>"#,
            num(start.0),
            num(start.1),
            num(end.0),
            num(end.1),
            r = num(ARC_RADIUS)
        );
        let bis = unit((0.0, 0.0), (u.0 + w.0, u.1 + w.1));
        let at = (v.0 + 2.4 * ARC_RADIUS * bis.0, v.1 + 2.4 * ARC_RADIUS * bis.1);
        text(&mut out, "spread-label", at.0, at.1, 12, &format!("s{} = {s}", i + 1));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Semicircular scale with a tick at every spread `k/divisions`, placed at
/// `asin(sqrt(s))` on each side of the vertical.
pub fn protractor_svg(divisions: u32) -> Result<String, CliError> {
    if divisions < MIN_DIVISIONS {
        return Err(CliError::Config(format!(
            "protractor needs at least {MIN_DIVISIONS} divisions, got {divisions}"
        )));
    }
    let (cx, cy, r) = (f64::from(WIDTH) / 2.0, f64::from(HEIGHT) * 0.9, f64::from(HEIGHT) * 0.7);
    let mut out = String::new();
    header(&mut out, &format!("spread protractor, {divisions} divisions"));
    let _ = writeln!(
        out,
        r#"  <path class="scale" d="M {} {} A {r} {r} 0 0 1 {} {} Z" fill="none" stroke="black" stroke-width="1.5"/>"#,
        num(cx - r),
        num(cy),
        num(cx + r),
        num(cy),
        r = num(r)
    );
    let _ = writeln!(out, r#"  <circle class="centre" cx="{}" cy="{}" r="3" fill="black"/>"#, num(cx), num(cy));

    for k in 0..=divisions {
        let s = Rational::new(k.into(), divisions.into());
        let theta = (f64::from(k) / f64::from(divisions)).sqrt().asin().to_degrees();
        let mut angles = vec![theta];
        if k != divisions {
            angles.push(180.0 - theta);
        }
        let major = *s.denom() <= 4u32.into();
        let len = if major { 24.0 } else { 14.0 };
        for angle in angles {
            let (c, sn) = (angle.to_radians().cos(), angle.to_radians().sin());
            let _ = writeln!(
                out,
                r#"  <line class="tick" data-spread="{s}" data-angle="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
                num(angle),
                num(cx + r * c),
                num(cy - r * sn),
                num(cx + (r - len) * c),
                num(cy - (r - len) * sn)
            );
            let lr = r + 16.0;
            text(&mut out, "tick-label", cx + lr * c, cy - lr * sn, if major { 12 } else { 9 }, &s.to_string());
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_triangle;

    fn draw(field: &str, points: &str) -> Result<String, CliError> {
        let field: FieldSpec = field.parse().unwrap();
        triangle_svg(&field, parse_triangle(&field, points)?)
    }

    #[test]
    fn number_format() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(-1.5), "-1.500000");
        assert_eq!(num(40.0), "40.000000");
    }

    #[test]
    fn worked_example_labels() {
        let svg = draw("rational", "0,0 7,5 2,8").unwrap();
        for label in ["Q1 = 34", "Q2 = 68", "Q3 = 74", "s1 = 529/1258", "s2 = 529/629", "s3 = 529/578", ">A1<"] {
            assert!(svg.contains(label), "missing {label}");
        }
        assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
        assert_eq!(svg, draw("rational", "0,0 7,5 2,8").unwrap());
    }

    #[test]
    fn fits_the_margin() {
        // the bounding box is 7 x 8, so the height is the binding side
        let px = to_pixels(&[
            RationalPoint::new(Rational::from_integer(0.into()), Rational::from_integer(0.into())),
            RationalPoint::new(Rational::from_integer(7.into()), Rational::from_integer(5.into())),
            RationalPoint::new(Rational::from_integer(2.into()), Rational::from_integer(8.into())),
        ]);
        assert_eq!(px[0].1, 570.0);
        assert_eq!(px[2].1, 30.0);
        assert!(px.iter().all(|(x, _)| (40.0..=760.0).contains(x)));
    }

    #[test]
    fn finite_fields_are_rejected() {
        let err = draw("fp:13", "0,0 1,2 3,4").unwrap_err();
        assert!(matches!(err, CliError::UnsupportedField(_)));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn protractor_ticks() {
        let svg = protractor_svg(20).unwrap();
        assert!(svg.contains(r#"data-spread="1/4" data-angle="30.000000""#));
        assert!(svg.contains(r#"data-spread="1/2" data-angle="45.000000""#));
        assert!(svg.contains(r#"data-spread="3/4" data-angle="60.000000""#));
        assert!(svg.contains(r#"data-spread="1/4" data-angle="150.000000""#));
        assert_eq!(svg.matches(r#"class="tick""#).count(), 41);
        assert!(protractor_svg(7).is_err());
    }
}
