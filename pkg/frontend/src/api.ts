/** Thin typed client for the analysis service. All fit numbers shown in the
 * dashboard come from these calls; nothing is recomputed client-side.
 */

import { FurnitureSpecJson, MismatchReportJson } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function readError(response: Response): Promise<never> {
  let message = `${response.status} ${response.statusText}`;
  try {
    const payload = (await response.json()) as { error?: string };
    if (payload.error) {
      message = payload.error;
    }
  } catch {
    // keep the status line
  }
  throw new ApiError(message, response.status);
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path);
    if (!response.ok) {
      await readError(response);
    }
    return (await response.json()) as T;
  }

  async health(): Promise<{ status: string; records: number; counts: Record<string, number> }> {
    return this.get("/health");
  }

  async stats(): Promise<unknown> {
    return this.get("/api/stats");
  }

  async guidelines(): Promise<Record<string, unknown>> {
    return this.get("/api/guidelines");
  }

  async mismatch(spec: FurnitureSpecJson): Promise<MismatchReportJson> {
    const response = await fetch(this.baseUrl + "/api/mismatch", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(spec),
    });
    if (!response.ok) {
      await readError(response);
    }
    return (await response.json()) as MismatchReportJson;
  }
}
