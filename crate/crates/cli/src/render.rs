//! Escape-time rendering of multibrot sets.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use multibrot_core::par::Exec;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub d: u32,
    pub center_re: f64,
    pub center_im: f64,
    pub width: f64,
    pub res_w: usize,
    pub res_h: usize,
    pub max_iter: u32,
    /// 0 is grayscale, 1 is a smooth color ramp.
    pub palette: u8,
}

impl RenderSpec {
    /// A window showing the whole of `M_d`.
    pub fn overview(d: u32, res_w: usize, res_h: usize, max_iter: u32) -> Self {
        let center_re = match d {
            2 => -0.75,
            d if d % 2 == 0 => -0.25,
            _ => 0.0,
        };
        RenderSpec {
            d,
            center_re,
            center_im: 0.0,
            width: 3.0,
            res_w,
            res_h,
            max_iter,
            palette: 0,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.d < 2 {
            return Err(format!("degree must be at least 2, got {}", self.d));
        }
        if self.res_w == 0 || self.res_h == 0 {
            return Err("resolution must be at least 1x1".into());
        }
        if self.width.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || !self.width.is_finite() {
            return Err("width must be positive".into());
        }
        if self.max_iter == 0 {
            return Err("max_iter must be at least 1".into());
        }
        if self.palette > 1 {
            return Err(format!("unknown palette {}", self.palette));
        }
        Ok(())
    }

    pub fn pixel_size(&self) -> f64 {
        self.width / self.res_w as f64
    }

    /// Parameter sampled by pixel `(i, j)`: its upper-left corner, so that
    /// with an even height and `center_im = 0` row `res_h / 2` lies on the
    /// real axis.
    pub fn pixel(&self, i: usize, j: usize) -> (f64, f64) {
        let s = self.pixel_size();
        (
            self.center_re + (i as f64 - self.res_w as f64 / 2.0) * s,
            self.center_im + (self.res_h as f64 / 2.0 - j as f64) * s,
        )
    }

    /// Row sampling the real axis, if any.
    pub fn real_row(&self) -> Option<usize> {
        let j = self.res_h as f64 / 2.0 + self.center_im / self.pixel_size();
        (j.fract() == 0.0 && j >= 0.0 && (j as usize) < self.res_h).then_some(j as usize)
    }
}

/// Escape data for one pixel: `None` for interior.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Escape {
    pub step: u32,
    /// Continuous escape time.
    pub smooth: f64,
}

pub fn escape(d: u32, c: (f64, f64), max_iter: u32) -> Option<Escape> {
    let radius = (c.0.hypot(c.1)).max(2f64.powf(1.0 / (d as f64 - 1.0)));
    let r2 = radius * radius;
    let (mut x, mut y) = (0.0f64, 0.0f64);
    for step in 1..=max_iter {
        let (mut px, mut py) = (x, y);
        for _ in 1..d {
            (px, py) = (px * x - py * y, px * y + py * x);
        }
        x = px + c.0;
        y = py + c.1;
        let m2 = x * x + y * y;
        if m2 > r2 {
            let ratio = (0.5 * m2.ln() / radius.ln().max(f64::MIN_POSITIVE)).max(1.0);
            let smooth = step as f64 + 1.0 - ratio.ln() / (d as f64).ln();
            return Some(Escape { step, smooth });
        }
    }
    None
}

/// Escape data for every pixel, row-major.
pub fn escape_map(spec: &RenderSpec, exec: Exec) -> Vec<Option<Escape>> {
    let mut out = vec![None; spec.res_w * spec.res_h];
    exec.for_each_chunk(&mut out, spec.res_w, |j, row| {
        for (i, px) in row.iter_mut().enumerate() {
            *px = escape(spec.d, spec.pixel(i, j), spec.max_iter);
        }
    });
    out
}

fn shade(e: Option<Escape>, palette: u8) -> [u8; 3] {
    let Some(e) = e else { return [0, 0, 0] };
    let t = e.smooth.max(0.0);
    match palette {
        0 => {
            let g = 48.0 + 207.0 * (1.0 - (-t / 24.0).exp());
            let g = g.round() as u8;
            [g, g, g]
        }
        _ => {
            let phase = t.sqrt() * 0.9;
            let channel = |k: f64| (127.5 + 127.5 * (phase + k).sin()).round() as u8;
            [channel(0.0), channel(2.1), channel(4.2)]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    pub rgb: Vec<u8>,
}

impl Image {
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.rgb);
        out
    }

    pub fn write_png<W: Write>(&self, w: W) -> io::Result<()> {
        let mut enc = png::Encoder::new(w, self.width as u32, self.height as u32);
        enc.set_color(png::ColorType::Rgb);
        enc.set_depth(png::BitDepth::Eight);
        let mut writer = enc.write_header().map_err(io::Error::other)?;
        writer.write_image_data(&self.rgb).map_err(io::Error::other)?;
        writer.finish().map_err(io::Error::other)
    }

    /// PNG when the extension is `.png`, binary PPM otherwise.
    pub fn save(&self, path: &Path) -> io::Result<()> {
        let file = BufWriter::new(File::create(path)?);
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("png")) {
            self.write_png(file)
        } else {
            let mut file = file;
            file.write_all(&self.to_ppm())?;
            file.flush()
        }
    }
}

pub fn render(spec: &RenderSpec, exec: Exec) -> Image {
    let map = escape_map(spec, exec);
    let rgb = map.iter().flat_map(|e| shade(*e, spec.palette)).collect();
    Image {
        width: spec.res_w,
        height: spec.res_h,
        rgb,
    }
}

/// Real parts of the leftmost and rightmost interior pixels on the real
/// axis row.
pub fn real_axis_span(spec: &RenderSpec, map: &[Option<Escape>]) -> Option<(f64, f64)> {
    let j = spec.real_row()?;
    let row = &map[j * spec.res_w..(j + 1) * spec.res_w];
    let first = row.iter().position(Option::is_none)?;
    let last = row.iter().rposition(Option::is_none)?;
    Some((spec.pixel(first, j).0, spec.pixel(last, j).0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pixels() {
        assert!(escape(2, (0.0, 0.0), 100).is_none());
        assert!(escape(3, (0.0, 0.0), 100).is_none());
        assert!(escape(2, (0.3, 0.0), 2000).is_some());
        assert!(escape(2, (-2.0, 0.0), 2000).is_none());
        assert!(escape(2, (-2.01, 0.0), 2000).is_some());
    }

    #[test]
    fn real_row_is_exact() {
        let spec = RenderSpec::overview(2, 800, 800, 50);
        assert_eq!(spec.real_row(), Some(400));
        assert_eq!(spec.pixel(400, 400), (-0.75, 0.0));
        assert_eq!(RenderSpec::overview(2, 10, 7, 5).real_row(), None);
    }

    #[test]
    fn parallel_rows_match() {
        let spec = RenderSpec::overview(3, 64, 48, 200);
        assert_eq!(render(&spec, Exec::Parallel), render(&spec, Exec::Sequential));
        let ppm = render(&spec, Exec::Parallel).to_ppm();
        assert!(ppm.starts_with(b"P6\n64 48\n255\n"));
        assert_eq!(ppm.len(), 13 + 64 * 48 * 3);
    }

    #[test]
    fn invalid_specs() {
        let mut spec = RenderSpec::overview(2, 8, 8, 10);
        spec.width = 0.0;
        assert!(spec.validate().is_err());
        spec.width = 1.0;
        spec.d = 1;
        assert!(spec.validate().is_err());
    }
}
