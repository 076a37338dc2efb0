/** Affine view transform: screen = world * scale + translate. */

export interface PanZoom {
  scale: number
  tx: number
  ty: number
}

export const MIN_SCALE = 0.05
export const MAX_SCALE = 20

export function identityTransform(): PanZoom {
  return { scale: 1, tx: 0, ty: 0 }
}

export function toScreen(t: PanZoom, x: number, y: number): [number, number] {
  return [x * t.scale + t.tx, y * t.scale + t.ty]
}

export function toWorld(t: PanZoom, sx: number, sy: number): [number, number] {
  return [(sx - t.tx) / t.scale, (sy - t.ty) / t.scale]
}

export function pan(t: PanZoom, dx: number, dy: number): PanZoom {
  return { scale: t.scale, tx: t.tx + dx, ty: t.ty + dy }
}

/** Zoom by `factor` keeping the screen point (px, py) fixed. */
export function zoomAround(t: PanZoom, factor: number, px: number, py: number): PanZoom {
  const scale = Math.min(MAX_SCALE, Math.max(MIN_SCALE, t.scale * factor))
  const applied = scale / t.scale
  return {
    scale,
    tx: px - (px - t.tx) * applied,
    ty: py - (py - t.ty) * applied,
  }
}

/** Fit a world-space rect into a screen of the given size with a margin. */
export function fitRect(
  rect: { x: number; y: number; w: number; h: number },
  screenW: number,
  screenH: number,
  margin = 20,
): PanZoom {
  if (rect.w <= 0 || rect.h <= 0) {
    return { scale: 1, tx: screenW / 2 - rect.x, ty: screenH / 2 - rect.y }
  }
  const scale = Math.min(
    (screenW - 2 * margin) / rect.w,
    (screenH - 2 * margin) / rect.h,
  )
  return {
    scale,
    tx: (screenW - rect.w * scale) / 2 - rect.x * scale,
    ty: (screenH - rect.h * scale) / 2 - rect.y * scale,
  }
}
