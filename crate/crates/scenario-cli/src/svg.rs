use sim::TickLog;

const W: f64 = 720.0;
const H: f64 = 360.0;
const PAD: f64 = 48.0;

fn polyline(points: &[(f64, f64)], colour: &str) -> String {
    let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    format!(
        "  <polyline fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        pts.join(" ")
    )
}

/// Static line chart of fear intensity (left axis, 0 to 1) and gap in
/// patches (right axis, 0 to the largest gap) against tick.
pub fn fear_gap_chart(title: &str, logs: &[TickLog]) -> String {
    let plot_w = W - 2.0 * PAD;
    let plot_h = H - 2.0 * PAD;
    let last = logs.last().map_or(1, |l| l.tick.max(1)) as f64;
    let max_gap = logs.iter().map(|l| l.gap_patches).fold(0.0, f64::max).max(1e-9);
    let x = |t: u64| PAD + plot_w * t as f64 / last;
    let y = |frac: f64| PAD + plot_h * (1.0 - frac.clamp(0.0, 1.0));
    let fear: Vec<(f64, f64)> = logs.iter().map(|l| (x(l.tick), y(l.intensity))).collect();
    let gap: Vec<(f64, f64)> = logs.iter().map(|l| (x(l.tick), y(l.gap_patches / max_gap))).collect();

    let mut s = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n\
         \x20 <rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n\
         \x20 <text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
        W / 2.0,
        escape(title)
    );
    s += &format!(
        "  <g stroke=\"black\" stroke-width=\"1\">\n    <line x1=\"{PAD}\" y1=\"{PAD}\" x2=\"{PAD}\" y2=\"{b}\"/>\n    <line x1=\"{PAD}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\"/>\n    <line x1=\"{r}\" y1=\"{PAD}\" x2=\"{r}\" y2=\"{b}\"/>\n  </g>\n",
        b = H - PAD,
        r = W - PAD
    );
    s += &format!(
        "  <g font-family=\"sans-serif\" font-size=\"11\">\n    <text x=\"{l}\" y=\"{t}\" fill=\"#c0392b\">fear 1</text>\n    <text x=\"{l}\" y=\"{b}\" fill=\"#c0392b\">0</text>\n    <text x=\"{r}\" y=\"{t}\" fill=\"#2471a3\" text-anchor=\"end\">gap {max_gap:.2}</text>\n    <text x=\"{r}\" y=\"{b}\" fill=\"#2471a3\" text-anchor=\"end\">0</text>\n    <text x=\"{c}\" y=\"{bl}\" text-anchor=\"middle\">tick (0 to {last})</text>\n  </g>\n",
        l = 4.0,
        r = W - 4.0,
        t = PAD + 4.0,
        b = H - PAD,
        c = W / 2.0,
        bl = H - 12.0,
    );
    s += &polyline(&fear, "#c0392b");
    s += &polyline(&gap, "#2471a3");
    s += "</svg>\n";
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
