/** Debounced, single-flight evaluation scheduler.
 *
 * Slider drags fire far faster than evaluations should, so requests are
 * debounced (150 ms by default) and at most one is ever in flight. Each sent
 * request carries a monotone sequence number; a response is applied only if
 * no newer response has been applied, so a late arrival can never clobber the
 * panel. On failure the last good report stays up and the failed spec is kept
 * for an explicit retry.
 */

import { FurnitureSpecJson, MismatchReportJson } from "./types.js";

export type EvaluateFn = (
  spec: FurnitureSpecJson,
) => Promise<MismatchReportJson>;

export interface SchedulerCallbacks {
  onReport: (report: MismatchReportJson, seq: number) => void;
  onError?: (error: unknown, seq: number) => void;
}

export const DEFAULT_DEBOUNCE_MS = 150;

export class EvaluationScheduler {
  private nextSeq = 1;
  private lastAppliedSeq = 0;
  private inFlight = false;
  private queued: FurnitureSpecJson | null = null;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private failed: FurnitureSpecJson | null = null;

  constructor(
    private readonly evaluate: EvaluateFn,
    private readonly callbacks: SchedulerCallbacks,
    private readonly debounceMs: number = DEFAULT_DEBOUNCE_MS,
  ) {}

  /** Latest desired spec; supersedes anything still waiting to be sent. */
  request(spec: FurnitureSpecJson): void {
    this.queued = spec;
    this.failed = null;
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.maybeSend();
    }, this.debounceMs);
  }

  /** Re-submit the spec whose evaluation failed, if nothing newer queued. */
  retry(): void {
    if (this.failed !== null && this.queued === null) {
      this.queued = this.failed;
      this.failed = null;
      this.maybeSend();
    }
  }

  get hasFailure(): boolean {
    return this.failed !== null;
  }

  /** True while a send is pending, queued, or in flight. */
  get busy(): boolean {
    return this.inFlight || this.timer !== null || this.queued !== null;
  }

  /** Resolve once nothing is pending (real-timer environments only). */
  async settled(pollMs = 10): Promise<void> {
    while (this.busy) {
      await new Promise((resolve) => setTimeout(resolve, pollMs));
    }
  }

  private maybeSend(): void {
    if (this.inFlight || this.queued === null) {
      return;
    }
    const spec = this.queued;
    this.queued = null;
    const seq = this.nextSeq++;
    this.inFlight = true;
    this.evaluate(spec).then(
      (report) => {
        this.inFlight = false;
        if (seq > this.lastAppliedSeq) {
          this.lastAppliedSeq = seq;
          this.callbacks.onReport(report, seq);
        }
        this.maybeSend();
      },
      (error) => {
        this.inFlight = false;
        if (this.queued === null) {
          this.failed = spec;
        }
        this.callbacks.onError?.(error, seq);
        this.maybeSend();
      },
    );
  }
}
