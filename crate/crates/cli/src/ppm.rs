/// Binary PPM (P6, maxval 255) from packed RGB rows, top row first.
pub fn ppm_bytes(width: usize, height: usize, rgb: &[u8]) -> Vec<u8> {
    assert_eq!(rgb.len(), width * height * 3, "pixel buffer does not match {width}x{height}");
    let header = format!("P6\n{width} {height}\n255\n");
    let mut out = Vec::with_capacity(header.len() + rgb.len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(rgb);
    out
}

/// Width, height and pixel bytes of a P6 file written by [`ppm_bytes`].
pub fn parse_ppm(bytes: &[u8]) -> Option<(usize, usize, &[u8])> {
    let mut fields = Vec::new();
    let mut pos = 0;
    while fields.len() < 4 {
        let rest = &bytes[pos..];
        let end = rest.iter().position(|b| b.is_ascii_whitespace())?;
        fields.push(std::str::from_utf8(&rest[..end]).ok()?);
        pos += end + 1;
    }
    if fields[0] != "P6" || fields[3] != "255" {
        return None;
    }
    let (w, h): (usize, usize) = (fields[1].parse().ok()?, fields[2].parse().ok()?);
    let data = &bytes[pos..];
    (data.len() == w * h * 3).then_some((w, h, data))
}
