/**
 * plots <convergence|scaling> --in <csv> --out <svg> [--title ...]
 *                             [--width N] [--height N] [--linear-x]
 */

import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";

import { PlotKind, PlotSpec, render } from "./render.js";

const USAGE =
  "usage: pwt-plots <convergence|scaling> --in <csv> --out <svg> " +
  "[--title text] [--width 1200] [--height 800] [--linear-x]";

function parseSize(name: string, raw: string | undefined, fallback: number): number {
  if (raw === undefined) return fallback;
  const value = Number(raw);
  if (!Number.isInteger(value) || value <= 0) {
    throw new Error(`--${name} must be a positive integer, got "${raw}"`);
  }
  return value;
}

export function main(argv: string[]): number {
  try {
    const kind = argv[0];
    if (kind !== "convergence" && kind !== "scaling") {
      throw new Error(`first argument must be convergence or scaling\n${USAGE}`);
    }
    const { values } = parseArgs({
      args: argv.slice(1),
      options: {
        in: { type: "string" },
        out: { type: "string" },
        title: { type: "string" },
        width: { type: "string" },
        height: { type: "string" },
        "linear-x": { type: "boolean" },
      },
    });
    if (!values.in || !values.out) {
      throw new Error(`--in and --out are required\n${USAGE}`);
    }
    const spec: PlotSpec = {
      inputCsv: values.in,
      kind: kind as PlotKind,
      outputImage: values.out,
      title: values.title,
      logX: values["linear-x"] ? false : undefined,
      width: parseSize("width", values.width, 1200),
      height: parseSize("height", values.height, 800),
    };
    render(spec);
    console.log(`wrote ${spec.outputImage}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
}

if (
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href
) {
  process.exit(main(process.argv.slice(2)));
}
