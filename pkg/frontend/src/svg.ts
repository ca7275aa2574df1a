/**
 * Deterministic SVG chart primitives: fixed layout, fixed palette, all
 * coordinates rounded to two decimals, no timestamps or randomness, so a
 * rerender of the same data is byte-identical.
 */

export interface Margin {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const DEFAULT_WIDTH = 1200;
export const DEFAULT_HEIGHT = 800;
export const MARGIN: Margin = { top: 70, right: 50, bottom: 80, left: 100 };

const PALETTE: Record<string, string> = {
  rls_swap: "#1f77b4",
  opo_ea: "#d62728",
  gsemo: "#2ca02c",
  semo: "#9467bd",
  semo_swap: "#ff7f0e",
};

const FALLBACK = ["#17becf", "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f"];

export function seriesColor(name: string, index: number): string {
  return PALETTE[name] ?? FALLBACK[index % FALLBACK.length];
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function fmt(value: number): string {
  return value.toFixed(2);
}

export type Scale = (value: number) => number;

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

/** Log10 scale; inputs are clamped to the positive domain start. */
export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0 || 1;
  return (v) => r0 + ((Math.log10(Math.max(v, d0)) - l0) / span) * (r1 - r0);
}

export function linearTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const mag = 10 ** Math.floor(Math.log10(rough));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= rough) ?? rough;
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step / 100; v += step) {
    ticks.push(Math.abs(v) < step / 100 ? 0 : v);
  }
  return ticks;
}

/** Powers of ten covering [min, max]. */
export function logTicks(min: number, max: number): number[] {
  const ticks: number[] = [];
  for (let k = Math.ceil(Math.log10(min) - 1e-9); 10 ** k <= max * (1 + 1e-9); k++) {
    ticks.push(10 ** k);
  }
  return ticks;
}

export function tickLabel(value: number): string {
  if (value === 0) return "0";
  const k = Math.log10(Math.abs(value));
  if (Number.isInteger(k) && (k >= 4 || k <= -3)) {
    return `1e${k}`;
  }
  return value % 1 === 0 ? String(value) : String(Number(value.toPrecision(6)));
}

export interface SeriesStyle {
  label: string;
  color: string;
  dash?: string;
}

export interface ChartFrame {
  width: number;
  height: number;
  plotX: number;
  plotY: number;
  plotW: number;
  plotH: number;
  body: string[];
}

export function openChart(width: number, height: number, title: string): ChartFrame {
  const frame: ChartFrame = {
    width,
    height,
    plotX: MARGIN.left,
    plotY: MARGIN.top,
    plotW: width - MARGIN.left - MARGIN.right,
    plotH: height - MARGIN.top - MARGIN.bottom,
    body: [],
  };
  frame.body.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="#ffffff"/>`,
    `<text x="${fmt(width / 2)}" y="${fmt(MARGIN.top / 2 + 6)}" font-size="20" ` +
      `font-weight="600" fill="#222222" text-anchor="middle">${escapeXml(title)}</text>`
  );
  return frame;
}

export function drawXAxis(
  frame: ChartFrame,
  ticks: number[],
  scale: Scale,
  label: string
): void {
  const y0 = frame.plotY + frame.plotH;
  for (const t of ticks) {
    const x = fmt(scale(t));
    frame.body.push(
      `<line x1="${x}" y1="${fmt(frame.plotY)}" x2="${x}" y2="${fmt(y0)}" ` +
        `stroke="#e5e5e5" stroke-width="1"/>`,
      `<text x="${x}" y="${fmt(y0 + 22)}" font-size="13" fill="#444444" ` +
        `text-anchor="middle">${escapeXml(tickLabel(t))}</text>`
    );
  }
  frame.body.push(
    `<text x="${fmt(frame.plotX + frame.plotW / 2)}" y="${fmt(y0 + 52)}" ` +
      `font-size="15" fill="#222222" text-anchor="middle">${escapeXml(label)}</text>`
  );
}

export function drawYAxis(
  frame: ChartFrame,
  ticks: number[],
  scale: Scale,
  label: string
): void {
  for (const t of ticks) {
    const y = fmt(scale(t));
    frame.body.push(
      `<line x1="${fmt(frame.plotX)}" y1="${y}" x2="${fmt(frame.plotX + frame.plotW)}" ` +
        `y2="${y}" stroke="#e5e5e5" stroke-width="1"/>`,
      `<text x="${fmt(frame.plotX - 8)}" y="${fmt(scale(t) + 4)}" font-size="13" ` +
        `fill="#444444" text-anchor="end">${escapeXml(tickLabel(t))}</text>`
    );
  }
  const cx = frame.plotX - 64;
  const cy = frame.plotY + frame.plotH / 2;
  frame.body.push(
    `<text x="${fmt(cx)}" y="${fmt(cy)}" font-size="15" fill="#222222" ` +
      `text-anchor="middle" transform="rotate(-90 ${fmt(cx)} ${fmt(cy)})">` +
      `${escapeXml(label)}</text>`
  );
}

export function drawSeries(
  frame: ChartFrame,
  cls: "series" | "reference",
  label: string,
  color: string,
  points: [number, number][],
  dash?: string
): void {
  if (points.length === 0) return;
  const attrs =
    `class="${cls}" data-label="${escapeXml(label)}" fill="none" ` +
    `stroke="${color}" stroke-width="2"` +
    (dash ? ` stroke-dasharray="${dash}"` : "");
  const coords = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  if (points.length === 1) {
    frame.body.push(
      `<circle class="${cls}" data-label="${escapeXml(label)}" ` +
        `cx="${fmt(points[0][0])}" cy="${fmt(points[0][1])}" r="3" fill="${color}"/>`
    );
    return;
  }
  frame.body.push(`<polyline ${attrs} points="${coords}"/>`);
}

export function drawLegend(frame: ChartFrame, entries: SeriesStyle[]): void {
  const x = frame.plotX + 14;
  let y = frame.plotY + 16;
  const w = 190;
  const h = entries.length * 22 + 10;
  frame.body.push(
    `<rect x="${fmt(x - 6)}" y="${fmt(y - 14)}" width="${w}" height="${h}" ` +
      `fill="#ffffff" fill-opacity="0.85" stroke="#cccccc" stroke-width="1"/>`
  );
  for (const entry of entries) {
    frame.body.push(
      `<line x1="${fmt(x)}" y1="${fmt(y)}" x2="${fmt(x + 28)}" y2="${fmt(y)}" ` +
        `stroke="${entry.color}" stroke-width="2"` +
        (entry.dash ? ` stroke-dasharray="${entry.dash}"` : "") +
        `/>`,
      `<text class="legend-label" x="${fmt(x + 36)}" y="${fmt(y + 4)}" ` +
        `font-size="13" fill="#222222">${escapeXml(entry.label)}</text>`
    );
    y += 22;
  }
}

export function closeChart(frame: ChartFrame): string {
  frame.body.push(
    `<rect x="${fmt(frame.plotX)}" y="${fmt(frame.plotY)}" width="${fmt(frame.plotW)}" ` +
      `height="${fmt(frame.plotH)}" fill="none" stroke="#333333" stroke-width="1"/>`,
    `</svg>`
  );
  return frame.body.join("\n") + "\n";
}
