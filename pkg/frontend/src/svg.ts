/** Dependency-free SVG rendering of the 2x3 correlation figure grid. */

import { TrajectoryTable } from "./csv.js";
import { FigureData, QdScale } from "./figure.js";

const PANEL_WIDTH = 340;
const PANEL_HEIGHT = 250;
const MARGIN = { top: 64, right: 24, bottom: 46, left: 62 };
const GAP_X = 26;
const GAP_Y = 34;
const MAX_POINTS_PER_LINE = 1500;

const BELL_STYLE = 'fill="none" stroke="#1f67b1" stroke-width="1.6"';
const SEPARABLE_STYLE =
  'fill="none" stroke="#c22f2f" stroke-width="1.6" stroke-dasharray="6 4"';

interface Column {
  title: string;
  select: (table: TrajectoryTable) => number[];
}

function columns(qdScale: QdScale): Column[] {
  const qdColumn = qdScale === "doubled" ? "qd_doubled" : "qd";
  return [
    { title: "Negativity", select: (t) => t.columns.get("ng")! },
    { title: "Quantum discord", select: (t) => t.columns.get(qdColumn)! },
    { title: "Entropic uncertainty", select: (t) => t.columns.get("u_approx")! },
  ];
}

function thin(values: number[]): number[] {
  if (values.length <= MAX_POINTS_PER_LINE) {
    return values;
  }
  const stride = Math.ceil(values.length / MAX_POINTS_PER_LINE);
  const out: number[] = [];
  for (let i = 0; i < values.length; i += stride) {
    out.push(values[i]);
  }
  if (out[out.length - 1] !== values[values.length - 1]) {
    out.push(values[values.length - 1]);
  }
  return out;
}

function niceTicks(maxValue: number, count: number): number[] {
  const ticks: number[] = [];
  for (let i = 0; i <= count; i++) {
    ticks.push((maxValue * i) / count);
  }
  return ticks;
}

function formatTick(value: number): string {
  const text = value.toPrecision(3);
  return String(Number(text));
}

function polyline(
  times: number[],
  values: number[],
  tMax: number,
  yMax: number,
  originX: number,
  originY: number,
  style: string,
): string {
  const xs = thin(times);
  const ys = thin(values);
  const points = xs
    .map((t, i) => {
      const x = originX + (t / tMax) * PANEL_WIDTH;
      const y = originY + PANEL_HEIGHT - (Math.min(ys[i], yMax) / yMax) * PANEL_HEIGHT;
      return `${x.toFixed(2)},${y.toFixed(2)}`;
    })
    .join(" ");
  return `<polyline ${style} points="${points}"/>`;
}

function renderPanel(
  row: { bell: TrajectoryTable; separable: TrajectoryTable },
  column: Column,
  originX: number,
  originY: number,
  xLabel: boolean,
): string {
  const times = row.bell.times;
  const tMax = times[times.length - 1] || 1;
  const bellValues = column.select(row.bell);
  const sepValues = column.select(row.separable);
  const finite = bellValues.concat(sepValues).filter(Number.isFinite);
  const yMax = Math.max(1e-6, ...finite) * 1.05;

  const parts: string[] = [`<g class="panel">`];
  parts.push(
    `<rect x="${originX}" y="${originY}" width="${PANEL_WIDTH}" height="${PANEL_HEIGHT}" fill="none" stroke="#444" stroke-width="1"/>`,
  );
  for (const tick of niceTicks(tMax, 6)) {
    const x = originX + (tick / tMax) * PANEL_WIDTH;
    parts.push(`<line x1="${x.toFixed(2)}" y1="${originY + PANEL_HEIGHT}" x2="${x.toFixed(2)}" y2="${originY + PANEL_HEIGHT + 5}" stroke="#444"/>`);
    parts.push(
      `<text x="${x.toFixed(2)}" y="${originY + PANEL_HEIGHT + 18}" font-size="11" text-anchor="middle">${formatTick(tick)}</text>`,
    );
  }
  for (const tick of niceTicks(yMax, 4)) {
    const y = originY + PANEL_HEIGHT - (tick / yMax) * PANEL_HEIGHT;
    parts.push(`<line x1="${originX - 5}" y1="${y.toFixed(2)}" x2="${originX}" y2="${y.toFixed(2)}" stroke="#444"/>`);
    parts.push(
      `<text x="${originX - 8}" y="${(y + 4).toFixed(2)}" font-size="11" text-anchor="end">${formatTick(tick)}</text>`,
    );
  }
  if (finite.length > 0) {
    parts.push(polyline(times, bellValues, tMax, yMax, originX, originY, BELL_STYLE));
    parts.push(polyline(times, sepValues, tMax, yMax, originX, originY, SEPARABLE_STYLE));
  }
  if (xLabel) {
    parts.push(
      `<text x="${originX + PANEL_WIDTH / 2}" y="${originY + PANEL_HEIGHT + 36}" font-size="13" text-anchor="middle">t</text>`,
    );
  }
  parts.push("</g>");
  return parts.join("\n");
}

/** Render the full 2x3 grid (rows: parameter regimes; columns: measures). */
export function renderFigureSvg(data: FigureData, qdScale: QdScale): string {
  const cols = columns(qdScale);
  const width = MARGIN.left + 3 * PANEL_WIDTH + 2 * GAP_X + MARGIN.right;
  const height = MARGIN.top + 2 * PANEL_HEIGHT + GAP_Y + MARGIN.bottom;

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    `<text x="${MARGIN.left}" y="24" font-size="16" font-weight="bold">${data.figureId}</text>`,
    // legend: solid = Bell start, dashed = separable start
    `<line x1="${width - 330}" y1="20" x2="${width - 290}" y2="20" stroke="#1f67b1" stroke-width="1.6"/>`,
    `<text x="${width - 284}" y="24" font-size="12">Bell state</text>`,
    `<line x1="${width - 190}" y1="20" x2="${width - 150}" y2="20" stroke="#c22f2f" stroke-width="1.6" stroke-dasharray="6 4"/>`,
    `<text x="${width - 144}" y="24" font-size="12">separable state</text>`,
  ];

  data.rows.forEach((row, rowIndex) => {
    const originY = MARGIN.top + rowIndex * (PANEL_HEIGHT + GAP_Y);
    parts.push(
      `<text x="14" y="${originY + PANEL_HEIGHT / 2}" font-size="12" text-anchor="middle" transform="rotate(-90 14 ${originY + PANEL_HEIGHT / 2})">${row.label} row</text>`,
    );
    cols.forEach((column, colIndex) => {
      const originX = MARGIN.left + colIndex * (PANEL_WIDTH + GAP_X);
      if (rowIndex === 0) {
        parts.push(
          `<text x="${originX + PANEL_WIDTH / 2}" y="${MARGIN.top - 10}" font-size="13" text-anchor="middle">${column.title}</text>`,
        );
      }
      parts.push(renderPanel(row, column, originX, originY, rowIndex === 1));
    });
  });

  parts.push("</svg>");
  return parts.join("\n");
}
