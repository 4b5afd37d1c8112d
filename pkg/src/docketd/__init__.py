"""docketd: docket management for a labor arbitration office.

Carries a dispute from complaint intake through single-entry conciliation,
docketing and raffling, status maintenance, reporting, and public tracking.
Party names are encrypted at rest; credentials are stored as salted digests.
"""

__version__ = "0.1.0"
