# Hypertrans Application Package
