import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { convergenceSvg, scalingSvg } from "../src/render.js";

const convergenceCsv = readFileSync(
  new URL("./fixtures/convergence.csv", import.meta.url),
  "utf8"
);
const scalingCsv = readFileSync(
  new URL("./fixtures/scaling.csv", import.meta.url),
  "utf8"
);

const CONV_HEADER = "algorithm,evaluations,meanNormalizedBenefit,repetitions";
const SCALE_HEADER =
  "algorithm,n,meanEvals,medianEvals,stddev,censoredCount,refN2,refNLogN";

function count(svg: string, re: RegExp): number {
  return (svg.match(re) ?? []).length;
}

describe("convergenceSvg", () => {
  it("draws one labeled curve per algorithm at the default size", () => {
    const svg = convergenceSvg(convergenceCsv);
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg).toContain('width="1200" height="800"');
    expect(count(svg, /<polyline class="series"/g)).toBe(5);
    expect(count(svg, /class="legend-label"/g)).toBe(5);
    for (const name of ["rls_swap", "opo_ea", "gsemo", "semo", "semo_swap"]) {
      expect(svg).toContain(`data-label="${name}"`);
    }
  });

  it("is byte-identical across renders", () => {
    const opts = { title: "Convergence" };
    expect(convergenceSvg(convergenceCsv, opts)).toBe(
      convergenceSvg(convergenceCsv, opts)
    );
  });

  it("renders a two-point single-algorithm file as one line", () => {
    const text = `${CONV_HEADER}\nrls_swap,0,0.0,1\nrls_swap,100,1.0,1\n`;
    const svg = convergenceSvg(text);
    expect(count(svg, /<polyline class="series"/g)).toBe(1);
    const points = svg.match(/<polyline class="series"[^>]*points="([^"]+)"/)![1];
    expect(points.split(" ").length).toBe(2);
  });

  it("labels the log axis in decades by default and linearly on request", () => {
    const logSvg = convergenceSvg(convergenceCsv);
    expect(logSvg).toContain(">1000<");
    const linSvg = convergenceSvg(convergenceCsv, { logX: false });
    expect(linSvg).toContain(">0<");
    expect(linSvg).not.toBe(logSvg);
  });

  it("escapes markup in the title", () => {
    const svg = convergenceSvg(convergenceCsv, { title: "a<b & c" });
    expect(svg).toContain("a&lt;b &amp; c");
    expect(svg).not.toContain("a<b");
  });

  it("propagates schema violations", () => {
    const bad = `${CONV_HEADER}\nrls_swap,0,7.0,1\n`;
    expect(() => convergenceSvg(bad, { file: "conv.csv" })).toThrowError(
      /conv\.csv:2: meanNormalizedBenefit/
    );
  });

  it("rejects unusable dimensions", () => {
    expect(() => convergenceSvg(convergenceCsv, { width: 50 })).toThrowError(
      /image size/
    );
  });
});

describe("scalingSvg", () => {
  it("draws algorithm curves plus two dashed reference curves", () => {
    const svg = scalingSvg(scalingCsv);
    expect(count(svg, /<polyline class="series"/g)).toBe(5);
    expect(count(svg, /<polyline class="reference"/g)).toBe(2);
    expect(count(svg, /stroke-dasharray="8,5"/g)).toBeGreaterThanOrEqual(2);
    expect(count(svg, /class="legend-label"/g)).toBe(7);
    expect(svg).toContain('data-label="n^2 reference"');
    expect(svg).toContain('data-label="n log n reference"');
  });

  it("still draws the references when every run is censored", () => {
    const rows = [10, 20, 40]
      .map((n) => `rls_swap,${n},nan,nan,nan,30,${n * n}.0,${n}.0`)
      .join("\n");
    const svg = scalingSvg(`${SCALE_HEADER}\n${rows}\n`);
    expect(count(svg, /<polyline class="series"/g)).toBe(0);
    expect(count(svg, /<polyline class="reference"/g)).toBe(2);
    expect(count(svg, /class="legend-label"/g)).toBe(2);
  });

  it("is byte-identical across renders", () => {
    expect(scalingSvg(scalingCsv)).toBe(scalingSvg(scalingCsv));
  });

  it("fails when nothing is plottable", () => {
    const row = `rls_swap,10,nan,nan,nan,30,nan,nan`;
    expect(() => scalingSvg(`${SCALE_HEADER}\n${row}\n`)).toThrowError(
      /no finite values/
    );
  });
});
