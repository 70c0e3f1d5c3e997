import { describe, expect, it } from "vitest";
import { join } from "path";

import { ValidationError } from "../src/csv.js";
import { buildRecipe } from "../src/recipes.js";

const FIXTURES = join(__dirname, "fixtures");

type AnySeries = { name: string; data: [number, number][]; xAxisIndex?: number };

function seriesOf(recipe: ReturnType<typeof buildRecipe>): AnySeries[] {
  return recipe.option.series as unknown as AnySeries[];
}

describe("fig2", () => {
  it("builds one series per p plus the semi-log inset", () => {
    const recipe = buildRecipe("fig2", join(FIXTURES, "fig2"));
    expect(recipe.seriesCount).toBe(3);
    expect(recipe.hasInset).toBe(true);
    const series = seriesOf(recipe);
    expect(series).toHaveLength(4);   // 3 main + inset
    expect(series.map((s) => s.name)).toEqual(["p=0", "p=0.5", "p=1", "p=0 (semi-log)"]);
    expect(series[3].xAxisIndex).toBe(1);
    expect((recipe.option.grid as object[]).length).toBe(2);
    // zero-probability tail points are dropped for the log axes
    expect(series[0].data.every(([, cp]) => cp > 0)).toBe(true);
  });

  it("requires the p=0 series for the inset", () => {
    expect(() => buildRecipe("fig2", join(FIXTURES, "fig2_nop0")))
      .toThrow(/p=0/);
  });

  it("rejects a missing directory", () => {
    expect(() => buildRecipe("fig2", join(FIXTURES, "missing_dir")))
      .toThrow(ValidationError);
  });
});

describe("fig3 and fig4", () => {
  it("draws one line over the p grid, sorted by p", () => {
    const recipe = buildRecipe("fig3", join(FIXTURES, "trend"));
    expect(recipe.seriesCount).toBe(1);
    const [series] = seriesOf(recipe);
    expect(series.data.map(([p]) => p)).toEqual([0, 0.5, 1]);
    expect(series.data.map(([, l]) => l)).toEqual([2.5, 2.3, 2.1]);
  });

  it("fig4 reads the clustering column", () => {
    const recipe = buildRecipe("fig4", join(FIXTURES, "trend"));
    expect(seriesOf(recipe)[0].data.map(([, c]) => c)).toEqual([0.74, 0.77, 0.81]);
  });

  it("names the missing measure column", () => {
    expect(() => buildRecipe("fig3", join(FIXTURES, "fig6")))
      .toThrow(/missing column 'mean_l'/);
  });

  it("requires summary.csv", () => {
    expect(() => buildRecipe("fig4", join(FIXTURES, "fig2")))
      .toThrow(/missing input file/);
  });
});

describe("fig5", () => {
  it("builds one panel per p and one series per (m, p) file", () => {
    const recipe = buildRecipe("fig5", join(FIXTURES, "fig5"));
    expect(recipe.seriesCount).toBe(4);   // 2 m values x 2 p values
    expect((recipe.option.grid as object[]).length).toBe(2);
    const series = seriesOf(recipe);
    expect(series.map((s) => s.name)).toEqual(
      ["m=1, p=0", "m=2, p=0", "m=1, p=1", "m=2, p=1"]);
    expect(series[2].xAxisIndex).toBe(1);
  });
});

describe("fig6", () => {
  it("builds one series per (m, p) group plus baselines", () => {
    const recipe = buildRecipe("fig6", join(FIXTURES, "fig6"));
    expect(recipe.seriesCount).toBe(3);   // two cliquenet groups + one er
    const series = seriesOf(recipe);
    expect(series.map((s) => s.name)).toEqual(["m=1, p=0", "m=2, p=1", "er k=5"]);
    expect(series[0].data).toEqual([[100, 9.2], [200, 9.8]]);
  });
});
