// WebSocket client: connects to the bridge, queues validated messages,
// and applies them once per animation frame.  Schema mismatches are
// reported through a callback so the page can show them.

import { BridgeMessage, parseMessage, SchemaMismatchError } from "./protocol.js";

export interface ClientCallbacks {
  onSchemaMismatch?: (error: SchemaMismatchError, raw: string) => void;
  onStatus?: (status: string) => void;
}

export class BridgeClient {
  private queue: BridgeMessage[] = [];
  private ws: WebSocket | null = null;

  constructor(
    readonly url: string,
    private callbacks: ClientCallbacks = {},
  ) {}

  connect(): void {
    this.callbacks.onStatus?.(`connecting to ${this.url}`);
    this.ws = new WebSocket(this.url);
    this.ws.onopen = () => this.callbacks.onStatus?.("connected");
    this.ws.onclose = () => {
      this.callbacks.onStatus?.("disconnected, retrying in 2s");
      setTimeout(() => this.connect(), 2000);
    };
    this.ws.onmessage = (event: MessageEvent) => {
      this.push(String(event.data));
    };
  }

  /** Validate and queue one raw frame (exposed for tests). */
  push(raw: string): boolean {
    try {
      this.queue.push(parseMessage(raw));
      return true;
    } catch (err) {
      if (err instanceof SchemaMismatchError) {
        this.callbacks.onSchemaMismatch?.(err, raw);
        return false;
      }
      throw err;
    }
  }

  /** Drain everything queued since the last frame, in arrival order. */
  drain(): BridgeMessage[] {
    const batch = this.queue;
    this.queue = [];
    return batch;
  }
}
