/**
 * Figure builders for the two experiment CSVs: convergence (normalized
 * best-so-far benefit over a log evaluation axis, one curve per algorithm)
 * and scaling (evaluations-to-optimum vs instance size on log-log axes,
 * with dashed n^2 and n log n reference curves).
 */

import { readFileSync, writeFileSync } from "node:fs";

import {
  ConvergenceSeries,
  ScalingSeries,
  parseConvergenceCsv,
  parseScalingCsv,
} from "./schema.js";
import {
  DEFAULT_HEIGHT,
  DEFAULT_WIDTH,
  SeriesStyle,
  drawLegend,
  drawSeries,
  drawXAxis,
  drawYAxis,
  closeChart,
  linearScale,
  linearTicks,
  logScale,
  logTicks,
  openChart,
  seriesColor,
} from "./svg.js";

export type PlotKind = "convergence" | "scaling";

export interface PlotSpec {
  inputCsv: string;
  kind: PlotKind;
  outputImage: string;
  title?: string;
  /** Convergence only; defaults to a logarithmic evaluation axis. */
  logX?: boolean;
  width?: number;
  height?: number;
}

export interface RenderOptions {
  title?: string;
  logX?: boolean;
  width?: number;
  height?: number;
  file?: string;
}

function dims(opts: RenderOptions): { width: number; height: number } {
  const width = opts.width ?? DEFAULT_WIDTH;
  const height = opts.height ?? DEFAULT_HEIGHT;
  if (!Number.isInteger(width) || !Number.isInteger(height) || width < 200 || height < 150) {
    throw new Error(`image size ${width}x${height} is not usable`);
  }
  return { width, height };
}

export function convergenceSvg(csvText: string, opts: RenderOptions = {}): string {
  const series: ConvergenceSeries[] = parseConvergenceCsv(
    csvText,
    opts.file ?? "convergence.csv"
  );
  const logX = opts.logX ?? true;
  const { width, height } = dims(opts);
  const frame = openChart(width, height, opts.title ?? "Mean normalized benefit");

  const maxEval = Math.max(...series.flatMap((s) => s.points.map((p) => p.evaluations)));
  const x0 = frame.plotX;
  const x1 = frame.plotX + frame.plotW;
  // On the log axis evaluation counts 0 and 1 share the leftmost decade.
  const xScale = logX
    ? logScale(1, Math.max(maxEval, 10), x0, x1)
    : linearScale(0, Math.max(maxEval, 1), x0, x1);
  const xTicks = logX
    ? logTicks(1, Math.max(maxEval, 10))
    : linearTicks(0, Math.max(maxEval, 1), 8);
  const yScale = linearScale(0, 1, frame.plotY + frame.plotH, frame.plotY);

  drawXAxis(frame, xTicks, xScale, "evaluations");
  drawYAxis(frame, linearTicks(0, 1, 5), yScale, "mean normalized benefit");

  const legend: SeriesStyle[] = [];
  series.forEach((s, i) => {
    const color = seriesColor(s.algorithm, i);
    drawSeries(
      frame,
      "series",
      s.algorithm,
      color,
      s.points.map((p) => [xScale(Math.max(p.evaluations, 1)), yScale(p.mean)])
    );
    legend.push({ label: s.algorithm, color });
  });
  drawLegend(frame, legend);
  return closeChart(frame);
}

export function scalingSvg(csvText: string, opts: RenderOptions = {}): string {
  const series: ScalingSeries[] = parseScalingCsv(csvText, opts.file ?? "scaling.csv");
  const { width, height } = dims(opts);
  const frame = openChart(width, height, opts.title ?? "Evaluations to reach the optimum");

  const allPoints = series.flatMap((s) => s.points);
  const ns = allPoints.map((p) => p.n);
  const finite = allPoints
    .flatMap((p) => [p.mean, p.refN2, p.refNLogN])
    .filter((v) => Number.isFinite(v));
  if (finite.length === 0) {
    throw new Error("no finite values to plot (all runs censored, no references)");
  }
  const yLo = Math.max(Math.min(...finite), 1);
  const yHi = Math.max(Math.max(...finite), yLo * 10);

  const xScale = logScale(
    Math.min(...ns),
    Math.max(Math.max(...ns), Math.min(...ns) * 10),
    frame.plotX,
    frame.plotX + frame.plotW
  );
  const yScale = logScale(
    10 ** Math.floor(Math.log10(yLo)),
    10 ** Math.ceil(Math.log10(yHi)),
    frame.plotY + frame.plotH,
    frame.plotY
  );

  drawXAxis(frame, [...new Set(ns)].sort((a, b) => a - b), xScale, "instance size n");
  drawYAxis(
    frame,
    logTicks(10 ** Math.floor(Math.log10(yLo)), 10 ** Math.ceil(Math.log10(yHi))),
    yScale,
    "mean evaluations"
  );

  const legend: SeriesStyle[] = [];
  series.forEach((s, i) => {
    const color = seriesColor(s.algorithm, i);
    const points = s.points
      .filter((p) => Number.isFinite(p.mean))
      .map((p): [number, number] => [xScale(p.n), yScale(Math.max(p.mean, 1))]);
    drawSeries(frame, "series", s.algorithm, color, points);
    if (points.length > 0) legend.push({ label: s.algorithm, color });
  });

  // Reference curves are identical across algorithms; use the first series.
  const refs: [keyof ScalingSeries["points"][0], string, string][] = [
    ["refN2", "n^2 reference", "#555555"],
    ["refNLogN", "n log n reference", "#999999"],
  ];
  for (const [key, label, color] of refs) {
    const points = series[0].points
      .filter((p) => Number.isFinite(p[key] as number))
      .map((p): [number, number] => [
        xScale(p.n),
        yScale(Math.max(p[key] as number, 1)),
      ]);
    drawSeries(frame, "reference", label, color, points, "8,5");
    if (points.length > 0) legend.push({ label, color, dash: "8,5" });
  }
  drawLegend(frame, legend);
  return closeChart(frame);
}

function checkOutputPath(path: string): void {
  if (!path.endsWith(".svg")) {
    throw new Error(`output must be an .svg path, got "${path}"`);
  }
}

export function renderConvergence(spec: PlotSpec): string {
  checkOutputPath(spec.outputImage);
  const svg = convergenceSvg(readFileSync(spec.inputCsv, "utf8"), {
    title: spec.title,
    logX: spec.logX,
    width: spec.width,
    height: spec.height,
    file: spec.inputCsv,
  });
  writeFileSync(spec.outputImage, svg);
  return svg;
}

export function renderScaling(spec: PlotSpec): string {
  checkOutputPath(spec.outputImage);
  const svg = scalingSvg(readFileSync(spec.inputCsv, "utf8"), {
    title: spec.title,
    width: spec.width,
    height: spec.height,
    file: spec.inputCsv,
  });
  writeFileSync(spec.outputImage, svg);
  return svg;
}

export function render(spec: PlotSpec): string {
  if (spec.kind === "convergence") return renderConvergence(spec);
  if (spec.kind === "scaling") return renderScaling(spec);
  throw new Error(`unknown plot kind "${(spec as { kind: string }).kind}"`);
}
