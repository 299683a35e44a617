use construct::build_dn;
use geom_core::{ConvexPolygon, Point2};
use render::{render_svg, RenderOptions};

fn unit_diag_square() -> ConvexPolygon {
    let h = 0.5f64.sqrt() / 2.0;
    ConvexPolygon::new(
        vec![
            Point2::new(-h, -h),
            Point2::new(h, -h),
            Point2::new(h, h),
            Point2::new(-h, h),
        ],
        vec![(0, 2), (1, 3)],
        "square",
    )
    .unwrap()
}

/// Minimal well-formedness scan: the prolog, balanced open/close tags,
/// and properly terminated self-closing elements.
fn assert_well_formed(doc: &str) {
    let body = doc
        .strip_prefix("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n")
        .expect("missing XML prolog");
    let mut stack: Vec<String> = Vec::new();
    let mut rest = body;
    while let Some(start) = rest.find('<') {
        let tail = &rest[start + 1..];
        let end = tail.find('>').expect("unterminated tag");
        let tag = &tail[..end];
        if let Some(name) = tag.strip_prefix('/') {
            assert_eq!(stack.pop().as_deref(), Some(name), "mismatched close tag");
        } else if !tag.ends_with('/') {
            let name: String = tag.chars().take_while(|c| !c.is_whitespace()).collect();
            stack.push(name);
        }
        rest = &tail[end + 1..];
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
}

fn count(doc: &str, needle: &str) -> usize {
    doc.matches(needle).count()
}

fn coords_in_canvas(doc: &str, width: f64, height: f64) {
    for (attr, bound) in [("x1=\"", width), ("x2=\"", width), ("y1=\"", height), ("y2=\"", height)] {
        let mut rest = doc;
        while let Some(pos) = rest.find(attr) {
            let tail = &rest[pos + attr.len()..];
            let end = tail.find('"').unwrap();
            let v: f64 = tail[..end].parse().unwrap();
            assert!((-1e-9..=bound + 1e-9).contains(&v), "{attr}{v} outside canvas");
            rest = tail;
        }
    }
}

#[test]
fn square_has_four_sides_and_two_chords() {
    let doc = render_svg(&unit_diag_square(), &RenderOptions::default()).unwrap();
    assert_well_formed(&doc);
    assert_eq!(count(&doc, "stroke=\"blue\""), 4);
    assert_eq!(count(&doc, "stroke=\"black\""), 2);
    assert_eq!(count(&doc, "<circle"), 4);
}

#[test]
fn chain_polygon_draws_every_side_and_chord() {
    let (poly, _, _) = build_dn(32).unwrap();
    let doc = render_svg(&poly, &RenderOptions::default()).unwrap();
    assert_well_formed(&doc);
    assert_eq!(count(&doc, "stroke=\"blue\""), 32);
    assert_eq!(count(&doc, "stroke=\"black\""), poly.diameter_pairs.len());
    assert_eq!(count(&doc, "<circle"), 32);
    coords_in_canvas(&doc, 600.0, 600.0);
}

#[test]
fn empty_caption_emits_no_text_element() {
    let doc = render_svg(&unit_diag_square(), &RenderOptions::default()).unwrap();
    assert_eq!(count(&doc, "<text"), 0);
}

#[test]
fn caption_adds_one_text_element_below_the_drawing() {
    let opts = RenderOptions {
        caption: "a square".to_string(),
        ..RenderOptions::default()
    };
    let doc = render_svg(&unit_diag_square(), &opts).unwrap();
    assert_well_formed(&doc);
    assert_eq!(count(&doc, "<text"), 1);
    assert!(doc.contains("height=\"660.0000\""));
}

#[test]
fn labels_add_one_text_element_per_vertex() {
    let opts = RenderOptions {
        show_labels: true,
        ..RenderOptions::default()
    };
    let doc = render_svg(&unit_diag_square(), &opts).unwrap();
    assert_well_formed(&doc);
    assert_eq!(count(&doc, "<text"), 4);
}

#[test]
fn rendering_is_byte_deterministic() {
    let (poly, _, _) = build_dn(16).unwrap();
    let opts = RenderOptions {
        caption: "chain polygon".to_string(),
        show_labels: true,
        ..RenderOptions::default()
    };
    let a = render_svg(&poly, &opts).unwrap();
    let b = render_svg(&poly, &opts).unwrap();
    assert_eq!(a, b);
}

#[test]
fn custom_colors_land_in_the_strokes() {
    let opts = RenderOptions {
        side_color: "#1f77b4".to_string(),
        diameter_color: "#333333".to_string(),
        ..RenderOptions::default()
    };
    let doc = render_svg(&unit_diag_square(), &opts).unwrap();
    assert_eq!(count(&doc, "stroke=\"#1f77b4\""), 4);
    assert_eq!(count(&doc, "stroke=\"#333333\""), 2);
}
