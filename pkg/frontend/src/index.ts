export {
  CONVERGENCE_HEADER,
  SCALING_HEADER,
  NORM_BAND,
  CsvSchemaError,
  parseConvergenceCsv,
  parseScalingCsv,
} from "./schema.js";
export type {
  ConvergencePoint,
  ConvergenceSeries,
  ScalingPoint,
  ScalingSeries,
  Series,
} from "./schema.js";
export {
  convergenceSvg,
  render,
  renderConvergence,
  renderScaling,
  scalingSvg,
} from "./render.js";
export type { PlotKind, PlotSpec, RenderOptions } from "./render.js";
export { DEFAULT_HEIGHT, DEFAULT_WIDTH, seriesColor } from "./svg.js";
